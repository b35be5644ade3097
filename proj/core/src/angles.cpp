#include "detloci/angles/angles.hpp"

#include "detloci/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace detloci::angles {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

void require_nonzero(const Subspace& s, const char* what) {
    if (s.is_zero()) throw DomainError(std::string(what) + ": zero subspace");
}

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DomainError(std::string(what) + ": ambient dimensions differ (" + std::to_string(a.ambient_dim()) + " vs " +
                          std::to_string(b.ambient_dim()) + ")");
}

Eigen::VectorXd singular_values(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    return Eigen::JacobiSVD<Matrix>(m).singularValues();  // descending
}

// Residual of the frame `a` after projecting onto span(b).
Matrix residual(const Matrix& a, const Matrix& b) { return a - b * (b.transpose() * a); }

double smallest_principal(const Matrix& a, const Matrix& b) {
    const Eigen::VectorXd cosines = singular_values(b.transpose() * a);
    const Eigen::VectorXd sines = singular_values(residual(a, b));
    const double c = cosines.size() > 0 ? std::min(1.0, cosines(0)) : 0.0;
    const double s = std::min(1.0, sines(sines.size() - 1));
    return std::atan2(s, c);
}

}  // namespace

Angle::Angle(double radians) : value_(radians) {
    if (!std::isfinite(radians) || radians < 0.0 || radians > std::numbers::pi + 1e-12)
        throw DomainError("Angle: value " + std::to_string(radians) + " outside [0, pi]");
    value_ = std::clamp(radians, 0.0, std::numbers::pi);
}

Angle angle_between(const Vector& u, const Vector& v) {
    if (u.size() != v.size()) throw DomainError("angle_between: dimension mismatch");
    const double nu = u.norm();
    const double nv = v.norm();
    if (!(nu > 0.0) || !(nv > 0.0)) throw DomainError("angle_between: zero vector");
    // arccos(<u,v>/|u||v|) evaluated as 2 atan(|a - b| / |a + b|) with a, b the
    // normalized vectors; identical in exact arithmetic, stable near 0 and pi.
    const Vector a = u / nu;
    const Vector b = v / nv;
    const double num = (a - b).norm();
    const double den = (a + b).norm();
    return Angle(std::clamp(2.0 * std::atan2(num, den), 0.0, std::numbers::pi));
}

Angle angle_to_subspace(const Vector& u, const Subspace& v) {
    require_nonzero(v, "angle_to_subspace");
    if (u.size() != v.ambient_dim()) throw DomainError("angle_to_subspace: dimension mismatch");
    const double nu = u.norm();
    if (!(nu > 0.0)) throw DomainError("angle_to_subspace: zero vector");
    const Vector p = v.project(u);
    const double np = p.norm();
    if (np <= 1e-12 * nu) return Angle(kHalfPi);
    return Angle(std::atan2((u - p).norm(), np));
}

Angle max_angle(const Subspace& u, const Subspace& v) {
    require_nonzero(u, "max_angle");
    require_nonzero(v, "max_angle");
    require_same_ambient(u, v, "max_angle");
    const Matrix& a = u.frame();
    const Matrix& b = v.frame();
    const Eigen::VectorXd cosines = singular_values(b.transpose() * a);
    const Eigen::VectorXd sines = singular_values(residual(a, b));
    const double c = u.dim() > v.dim() ? 0.0 : std::min(1.0, cosines(cosines.size() - 1));
    const double s = std::min(1.0, sines(0));
    return Angle(std::atan2(s, c));
}

std::vector<double> principal_angles(const Subspace& u, const Subspace& v) {
    require_nonzero(u, "principal_angles");
    require_nonzero(v, "principal_angles");
    require_same_ambient(u, v, "principal_angles");
    // Order so that the first argument is the smaller one: then every residual
    // singular value pairs with a cosine.
    const bool swap = u.dim() > v.dim();
    const Matrix& a = swap ? v.frame() : u.frame();
    const Matrix& b = swap ? u.frame() : v.frame();
    const Eigen::VectorXd cosines = singular_values(b.transpose() * a);  // descending
    const Eigen::VectorXd sines = singular_values(residual(a, b));       // descending
    const auto k = cosines.size();
    std::vector<double> out(static_cast<std::size_t>(k));
    for (Eigen::Index i = 0; i < k; ++i)
        out[static_cast<std::size_t>(i)] = std::atan2(std::min(1.0, sines(k - 1 - i)), std::min(1.0, cosines(i)));
    std::sort(out.begin(), out.end());
    return out;
}

Angle first_principal_angle(const Subspace& u, const Subspace& v) {
    require_same_ambient(u, v, "first_principal_angle");
    if (u.is_zero() || v.is_zero()) return Angle(kHalfPi);
    return Angle(smallest_principal(u.frame(), v.frame()));
}

bool is_transversal(const Subspace& u, const Subspace& v, double tol) {
    require_same_ambient(u, v, "is_transversal");
    const int n = u.ambient_dim();
    if (u.dim() + v.dim() < n) return false;
    Matrix stacked(n, u.dim() + v.dim());
    stacked << u.frame(), v.frame();
    const Eigen::VectorXd sv = singular_values(stacked);
    return sv(n - 1) > tol;
}

Subspace intersect(const Subspace& u, const Subspace& v, double tol) {
    require_same_ambient(u, v, "intersect");
    if (!(tol > 0.0)) throw DomainError("intersect: tolerance must be positive");
    if (u.is_zero() || v.is_zero()) return Subspace::zero(u.ambient_dim());
    const Matrix& a = u.frame();
    const Matrix& b = v.frame();
    Eigen::JacobiSVD<Matrix> svd(residual(a, b), Eigen::ComputeFullV);
    const Matrix& dirs = svd.matrixV();
    const Eigen::VectorXd& sines = svd.singularValues();
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < dirs.cols(); ++i) {
        const double s = i < sines.size() ? sines(i) : 0.0;
        const double c = (b.transpose() * (a * dirs.col(i))).norm();
        if (std::sin(std::atan2(s, c)) <= tol) keep.push_back(i);
    }
    if (keep.empty()) return Subspace::zero(u.ambient_dim());
    Matrix w(a.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) w.col(static_cast<Eigen::Index>(j)) = a * dirs.col(keep[j]);
    return Subspace::from_orthonormal(w);
}

Angle min_angle(const Subspace& u, const Subspace& v, double tol) {
    if (!(tol > 0.0)) throw DomainError("min_angle: tolerance must be positive");
    require_nonzero(u, "min_angle");
    require_nonzero(v, "min_angle");
    require_same_ambient(u, v, "min_angle");
    if (u.dim() + v.dim() < u.ambient_dim()) return Angle(0.0);
    if (!is_transversal(u, v, tol)) return Angle(0.0);
    const Subspace w = intersect(u, v, tol);
    const Matrix uc = relative_complement(u.frame(), w.frame());
    const Matrix vc = relative_complement(v.frame(), w.frame());
    if (uc.cols() == 0 || vc.cols() == 0) return Angle(kHalfPi);
    return Angle(smallest_principal(uc, vc));
}

Angle min_angle_dual(const Subspace& u, const Subspace& v) {
    require_nonzero(u, "min_angle_dual");
    require_nonzero(v, "min_angle_dual");
    require_same_ambient(u, v, "min_angle_dual");
    return first_principal_angle(u.orthogonal_complement(), v.orthogonal_complement());
}

ComplexStructure::ComplexStructure(int ambient_dim) {
    if (ambient_dim < 2 || ambient_dim % 2 != 0)
        throw DomainError("ComplexStructure: ambient dimension must be even and positive");
    j_ = Matrix::Zero(ambient_dim, ambient_dim);
    for (int i = 0; i + 1 < ambient_dim; i += 2) {
        j_(i + 1, i) = 1.0;
        j_(i, i + 1) = -1.0;
    }
}

ComplexStructure::ComplexStructure(Matrix j) : j_(std::move(j)) {
    if (j_.rows() != j_.cols() || j_.rows() % 2 != 0 || j_.rows() == 0)
        throw DomainError("ComplexStructure: matrix must be square of even size");
    const Matrix sq = j_ * j_ + Matrix::Identity(j_.rows(), j_.cols());
    if (sq.cwiseAbs().maxCoeff() > 1e-12) throw DomainError("ComplexStructure: J^2 != -I");
}

Angle complex_angle(const Subspace& v, const ComplexStructure& j) {
    require_nonzero(v, "complex_angle");
    if (v.dim() % 2 != 0) throw DomainError("complex_angle: odd-dimensional subspace");
    if (v.ambient_dim() != j.ambient_dim()) throw DomainError("complex_angle: ambient dimension mismatch");
    return max_angle(v, j.apply(v));
}

bool is_complex_subspace(const Subspace& v, const ComplexStructure& j, double tol) {
    return complex_angle(v, j).radians() <= tol;
}

bool is_symplectic_subspace(const Subspace& v, const ComplexStructure& j, double tol) {
    return complex_angle(v, j).radians() < kHalfPi - tol;
}

HolomorphicityFit asymptotic_holomorphicity_rate(std::span<const std::pair<int, Subspace>> samples,
                                                 const ComplexStructure& j) {
    if (samples.size() < 3) throw PreconditionError("asymptotic_holomorphicity_rate: need at least 3 samples");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].first <= 0) throw PreconditionError("asymptotic_holomorphicity_rate: k must be positive");
        if (i > 0 && samples[i].first <= samples[i - 1].first)
            throw PreconditionError("asymptotic_holomorphicity_rate: k must be strictly increasing");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    for (const auto& [k, v] : samples) {
        const double beta = complex_angle(v, j).radians();
        if (beta <= 1e-14) continue;
        xs.push_back(std::log(static_cast<double>(k)));
        ys.push_back(std::log(beta));
    }
    HolomorphicityFit fit;
    fit.samples_used = xs.size();
    if (xs.empty()) {
        fit.exactly_holomorphic = true;
        fit.pass = true;
        return fit;
    }
    if (xs.size() < 2) throw DomainError("asymptotic_holomorphicity_rate: fewer than two nonzero samples to fit");
    const auto m = static_cast<double>(xs.size());
    double sx = 0;
    double sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / m;
    const double my = sy / m;
    double sxx = 0;
    double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.exponent = sxy / sxx;
    fit.constant = std::exp(my - fit.exponent * mx);
    fit.pass = fit.exponent <= -0.5 + 0.1;
    return fit;
}

SigmaTransverseResult check_sigma_transverse(std::span<const TransversalitySample> samples, double sigma, double tol) {
    if (!(sigma > 0.0)) throw DomainError("check_sigma_transverse: sigma must be positive");
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& s = samples[i];
        if (s.tangent_image.ambient_dim() != s.distribution_plane.ambient_dim())
            throw DomainError("check_sigma_transverse: sample " + std::to_string(i) + " has mismatched ambient dimensions");
        if (!(s.distance < sigma)) continue;
        if (!(min_angle(s.tangent_image, s.distribution_plane).radians() > sigma - tol)) return {false, i};
    }
    return {true, std::nullopt};
}

BridgeBound bridge_angle_bound(const Subspace& u, const Subspace& v, double tol) {
    require_nonzero(u, "bridge_angle_bound");
    require_nonzero(v, "bridge_angle_bound");
    require_same_ambient(u, v, "bridge_angle_bound");
    const Subspace perp = v.orthogonal_complement();
    if (perp.is_zero()) throw DomainError("bridge_angle_bound: V is the whole space, V^⊥ = 0");
    BridgeBound out;
    out.observed = min_angle(u, v, tol);
    // h: U -> V^⊥ in orthonormal coordinates.
    const Matrix h = perp.frame().transpose() * u.frame();
    if (h.cols() < h.rows()) return out;
    const Eigen::VectorXd sv = singular_values(h);
    const double smin = sv(h.rows() - 1);
    if (!(smin > tol)) return out;
    // The minimal-norm right inverse is the pseudo-inverse, of norm 1/sigma_min.
    out.theta_norm = 1.0 / smin;
    out.angle_lower_bound = smin;
    return out;
}

}  // namespace detloci::angles
