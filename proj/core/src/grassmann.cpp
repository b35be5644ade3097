#include "detloci/grassmann/grassmann.hpp"

#include "detloci/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace detloci::grassmann {

namespace {

Eigen::VectorXd singular_values(const CMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return {};
    return Eigen::JacobiSVD<CMatrix>(m).singularValues();
}

// Coordinate of an arbitrary index list: sign of the sorting permutation times
// the coordinate of the sorted set, zero on repeated indices.
template <class Scalar>
Scalar signed_coordinate(const PlueckerCoords<Scalar>& p, std::vector<int> idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] > idx[j]; --j) {
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    for (std::size_t i = 1; i < idx.size(); ++i)
        if (idx[i] == idx[i - 1]) return Scalar(0);
    const Scalar& v = p.at(idx);
    return sign > 0 ? v : Scalar(0) - v;
}

template <class Scalar>
std::vector<Scalar> relations_impl(const PlueckerCoords<Scalar>& p) {
    std::vector<Scalar> out;
    if (p.r < 1 || p.r >= p.n) return out;
    const auto lows = exact::increasing_subsets(p.n, p.r - 1);
    const auto highs = exact::increasing_subsets(p.n, p.r + 1);
    for (const auto& low : lows)
        for (const auto& high : highs) {
            Scalar total(0);
            for (std::size_t s = 0; s < high.size(); ++s) {
                std::vector<int> left = low;
                left.push_back(high[s]);
                std::vector<int> right;
                for (std::size_t t = 0; t < high.size(); ++t)
                    if (t != s) right.push_back(high[t]);
                Scalar term = signed_coordinate(p, left) * signed_coordinate(p, right);
                if (s % 2 == 0)
                    total += term;
                else
                    total -= term;
            }
            out.push_back(total);
        }
    return out;
}

template <class M, class Scalar>
PlueckerCoords<Scalar> embed_impl(const M& matrix) {
    const int r = static_cast<int>(matrix.rows());
    const int n = static_cast<int>(matrix.cols());
    if (r < 1 || r > n) throw DomainError("pluecker_embed: need 1 <= r <= N");
    const M row = exact::compound(matrix, r);
    PlueckerCoords<Scalar> out{r, n, {}};
    out.coords.reserve(static_cast<std::size_t>(row.cols()));
    for (long j = 0; j < row.cols(); ++j) out.coords.push_back(row(0, j));
    return out;
}

}  // namespace

GrassmannPoint::GrassmannPoint(CMatrix matrix) : matrix_(std::move(matrix)) {
    if (matrix_.rows() < 1 || matrix_.rows() > matrix_.cols())
        throw DomainError("GrassmannPoint: need 1 <= r <= N, got " + std::to_string(matrix_.rows()) + " x " +
                          std::to_string(matrix_.cols()));
    if (!matrix_.allFinite()) throw DomainError("GrassmannPoint: non-finite entry");
    const Eigen::VectorXd sv = singular_values(matrix_);
    if (!(sv(sv.size() - 1) > 1e-10 * sv(0))) throw DomainError("GrassmannPoint: matrix is not of full rank");
}

GrassmannPoint GrassmannPoint::base_point(int r, int n) {
    CMatrix m = CMatrix::Zero(r, n);
    m.leftCols(r).setIdentity();
    return GrassmannPoint(std::move(m));
}

bool GrassmannPoint::span_equals(const GrassmannPoint& other, double tol) const {
    if (rank() != other.rank() || ambient_dim() != other.ambient_dim()) return false;
    const CMatrix a = matrix_.transpose();
    const CMatrix b = other.matrix_.transpose();
    const CMatrix qa = Eigen::HouseholderQR<CMatrix>(a).householderQ() * CMatrix::Identity(a.rows(), a.cols());
    const CMatrix qb = Eigen::HouseholderQR<CMatrix>(b).householderQ() * CMatrix::Identity(b.rows(), b.cols());
    return (qb - qa * (qa.adjoint() * qb)).norm() <= tol && (qa - qb * (qb.adjoint() * qa)).norm() <= tol;
}

PlueckerCoords<Complex> pluecker_embed(const GrassmannPoint& p) {
    return embed_impl<CMatrix, Complex>(p.matrix());
}

PlueckerCoords<ExactComplex> pluecker_embed(const ExactMatrix& matrix) {
    return embed_impl<ExactMatrix, ExactComplex>(matrix);
}

std::vector<ExactComplex> pluecker_relations(const PlueckerCoords<ExactComplex>& p) { return relations_impl(p); }

std::vector<Complex> pluecker_relations(const PlueckerCoords<Complex>& p) { return relations_impl(p); }

namespace {

double one_sided_chord(const CVector& a, const CVector& b) {
    const Complex inner = a.dot(b);  // conjugate-linear in a
    const double modulus = std::abs(inner);
    if (modulus == 0.0) return std::numbers::sqrt2;
    const Complex phase = std::conj(inner) / modulus;
    return (a - phase * b).norm();
}

}  // namespace

double fs_distance(const GrassmannPoint& p, const GrassmannPoint& q) {
    if (p.rank() != q.rank() || p.ambient_dim() != q.ambient_dim())
        throw DomainError("fs_distance: points lie in different grassmannians");
    const auto pc = pluecker_embed(p).coords;
    const auto qc = pluecker_embed(q).coords;
    const CVector a = Eigen::Map<const CVector>(pc.data(), static_cast<Eigen::Index>(pc.size())).normalized();
    const CVector b = Eigen::Map<const CVector>(qc.data(), static_cast<Eigen::Index>(qc.size())).normalized();
    // Averaging both orders makes d(p, q) == d(q, p) bit for bit.
    const double chord = 0.5 * (one_sided_chord(a, b) + one_sided_chord(b, a));
    return 2.0 * std::asin(std::min(1.0, chord / 2.0));
}

CMatrix chart_psi0(const GrassmannPoint& p) {
    const int r = p.rank();
    const CMatrix lead = p.matrix().leftCols(r);
    const Eigen::VectorXd sv = singular_values(lead);
    const double smin = sv(sv.size() - 1);
    if (!(smin > 0.0) || sv(0) / smin >= 1e12)
        throw OutsideChartError("chart_psi0: leading block is singular, point is outside the standard chart");
    return lead.partialPivLu().solve(p.matrix().rightCols(p.ambient_dim() - r));
}

GrassmannPoint chart_inverse(const CMatrix& z) {
    const auto r = z.rows();
    CMatrix m(r, r + z.cols());
    m << CMatrix::Identity(r, r), z;
    return GrassmannPoint(std::move(m));
}

double chart_isometry_defect(int r, int n) {
    if (r < 1 || r >= n) throw DomainError("chart_isometry_defect: need 1 <= r < N");
    const int cols = n - r;
    const int complex_dim = r * cols;
    const int real_dim = 2 * complex_dim;
    const GrassmannPoint base = GrassmannPoint::base_point(r, n);
    constexpr double step = 1e-5;

    auto direction = [&](int a) {
        CMatrix e = CMatrix::Zero(r, cols);
        const int idx = a % complex_dim;
        e(idx / cols, idx % cols) = a < complex_dim ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
        return e;
    };
    // Second central difference of fs_distance^2 along v; d^2(t) = G(v,v) t^2 + O(t^4).
    auto quadratic = [&](const CMatrix& v) {
        const double fp = std::pow(fs_distance(base, chart_inverse(step * v)), 2);
        const double fm = std::pow(fs_distance(base, chart_inverse(-step * v)), 2);
        return (fp + fm) / (2.0 * step * step);
    };

    Eigen::MatrixXd gram(real_dim, real_dim);
    for (int a = 0; a < real_dim; ++a) {
        gram(a, a) = quadratic(direction(a));
        for (int b = 0; b < a; ++b) {
            const double g = (quadratic(direction(a) + direction(b)) - quadratic(direction(a) - direction(b))) / 4.0;
            gram(a, b) = g;
            gram(b, a) = g;
        }
    }
    const Eigen::MatrixXd dev = gram - Eigen::MatrixXd::Identity(real_dim, real_dim);
    return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dev).eigenvalues().cwiseAbs().maxCoeff();
}

CMatrix compound_matrix(const CMatrix& a, int l) { return exact::compound(a, l); }

ExactMatrix compound_matrix(const ExactMatrix& a, int l) { return exact::compound(a, l); }

int rank_stratum(const MorphismSample& phi, double tol) {
    if (!(tol > 0.0)) throw DomainError("rank_stratum: tolerance must be positive");
    const Eigen::VectorXd sv = singular_values(phi.matrix);
    if (sv.size() == 0) return 0;
    const double scale = sv(0) > tol ? sv(0) : 1.0;
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * scale) ++rank;
    return rank;
}

int exact_rank(const ExactMatrix& input) {
    ExactMatrix a = input;
    int rank = 0;
    const long rows = a.rows();
    const long cols = a.cols();
    for (long col = 0; col < cols && rank < rows; ++col) {
        long pivot = -1;
        for (long i = rank; i < rows; ++i)
            if (!a(i, col).is_zero()) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        for (long j = 0; j < cols; ++j) std::swap(a(pivot, j), a(rank, j));
        const ExactComplex p = a(rank, col);
        for (long i = rank + 1; i < rows; ++i) {
            if (a(i, col).is_zero()) continue;
            const ExactComplex f = a(i, col) / p;
            for (long j = col; j < cols; ++j) a(i, j) -= f * a(rank, j);
        }
        ++rank;
    }
    return rank;
}

int expected_stratum_codimension(int r_e, int r_f, int r) {
    if (r < 0 || r > std::min(r_e, r_f)) throw DomainError("expected_stratum_codimension: rank out of range");
    return 2 * (r_e - r) * (r_f - r);
}

int rank_variety_tangent_rank(const MorphismSample& phi) {
    const int n = phi.target_dim();
    const int m = phi.source_dim();
    if (n < 1 || m < n) throw PreconditionError("rank_variety_tangent_rank: need m >= n >= 1");
    if (rank_stratum(phi, 1e-10) != n) throw PreconditionError("rank_variety_tangent_rank: phi is not of full rank");
    constexpr double step = 1e-6;
    auto wedge = [&](const CMatrix& x) { return compound_matrix(x, n); };
    const auto out_dim = wedge(phi.matrix).cols();
    Eigen::MatrixXd jac(2 * out_dim, 2 * n * m);
    int column = 0;
    for (int part = 0; part < 2; ++part)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < m; ++j) {
                CMatrix e = CMatrix::Zero(n, m);
                e(i, j) = part == 0 ? Complex(1.0, 0.0) : Complex(0.0, 1.0);
                const CMatrix diff = (wedge(phi.matrix + step * e) - wedge(phi.matrix - step * e)) / (2.0 * step);
                for (Eigen::Index k = 0; k < out_dim; ++k) {
                    jac(k, column) = diff(0, k).real();
                    jac(out_dim + k, column) = diff(0, k).imag();
                }
                ++column;
            }
    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues();
    int real_rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-6 * sv(0)) ++real_rank;
    return real_rank / 2;
}

int rank_variety_stated_dimension(int m, int n) { return m - n + 1; }

int rank_variety_cone_dimension(int m, int n) { return n * (m - n) + 1; }

CMatrix curvature_endomorphism(const CMatrix& chart_point, const CMatrix& tangent) {
    const auto r = chart_point.rows();
    const auto cols = chart_point.cols();
    if (tangent.rows() != r || tangent.cols() != cols)
        throw DomainError("curvature_endomorphism: tangent shape does not match the chart point");
    const auto n = r + cols;
    // Frame f (n x r): column j is e_j + sum_k z_jk e_{r+k}; df(u) has the same
    // shape with the identity block replaced by zero.
    CMatrix f(n, r);
    f << CMatrix::Identity(r, r), chart_point.transpose();
    CMatrix d(n, r);
    d << CMatrix::Zero(r, r), tangent.transpose();
    const CMatrix h = f.adjoint() * f;
    const CMatrix h_inv = h.inverse();
    const CMatrix proj_perp = CMatrix::Identity(n, n) - f * h_inv * f.adjoint();
    // R_{U*}(u, Ju) = i h^{-1} D^* (I - f h^{-1} f^*) D and -i R_U = i R_{U*}^t.
    const CMatrix m = h_inv * d.adjoint() * proj_perp * d;
    return -m.transpose();
}

double CurvatureReport::max_eigenvalue() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : samples)
        if (!s.eigenvalues.empty()) best = std::max(best, s.eigenvalues.back());
    return best;
}

double CurvatureReport::max_top_exterior() const {
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& s : samples) best = std::max(best, s.top_exterior);
    return best;
}

CurvatureSample curvature_at_base(const CMatrix& tangent) {
    const double norm = tangent.norm();
    if (!(norm > 0.0)) throw DomainError("curvature_at_base: zero tangent");
    CurvatureSample s;
    s.tangent = tangent / norm;
    const CMatrix endo = curvature_endomorphism(CMatrix::Zero(tangent.rows(), tangent.cols()), s.tangent);
    Eigen::ComplexEigenSolver<CMatrix> solver(endo, false);
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        s.eigenvalues.push_back(solver.eigenvalues()(i).real());
        s.max_imaginary_part = std::max(s.max_imaginary_part, std::abs(solver.eigenvalues()(i).imag()));
    }
    std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
    s.top_exterior = endo.trace().real();
    return s;
}

CurvatureReport universal_curvature_at_base(int r, int n, int samples, std::uint64_t seed) {
    if (r < 1 || r >= n) throw DomainError("universal_curvature_at_base: need 1 <= r < N");
    if (samples < 0) throw DomainError("universal_curvature_at_base: negative sample count");
    const int cols = n - r;
    CurvatureReport report{r, n, {}};

    auto record = [&](const CMatrix& u) { report.samples.push_back(curvature_at_base(u)); };

    for (int j = 0; j < r; ++j)
        for (int k = 0; k < cols; ++k) {
            CMatrix e = CMatrix::Zero(r, cols);
            e(j, k) = 1.0;
            record(e);
        }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    for (int s = 0; s < samples; ++s) {
        CMatrix u(r, cols);
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < cols; ++k) u(j, k) = Complex(gauss(rng), gauss(rng));
        record(u);
    }
    return report;
}

}  // namespace detloci::grassmann
