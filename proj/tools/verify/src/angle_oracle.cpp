#include "detloci/verify/angle_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace detloci::verify {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

VectorXd project(const MatrixXd& onb, const VectorXd& x) {
    VectorXd p = VectorXd::Zero(x.size());
    for (Eigen::Index j = 0; j < onb.cols(); ++j) p += onb.col(j).dot(x) * onb.col(j);
    return p;
}

// Angle between x and the span of the orthonormal columns.
double angle_to(const MatrixXd& onb, const VectorXd& x) {
    const VectorXd p = project(onb, x);
    const double along = p.norm();
    if (along <= 1e-12 * x.norm()) return std::numbers::pi / 2.0;
    return std::atan2((x - p).norm(), along);
}

MatrixXd complement(const MatrixXd& onb, int n) {
    MatrixXd both(n, onb.cols() + n);
    both << onb, MatrixXd::Identity(n, n);
    const MatrixXd full = gram_schmidt(both);
    return full.rightCols(full.cols() - onb.cols());
}

// Points of the unit sphere of span(onb) visited by the scan (dims 1 or 2).
template <class F>
void scan(const MatrixXd& onb, int steps, F&& visit) {
    if (onb.cols() == 1) {
        visit(VectorXd(onb.col(0)));
        return;
    }
    if (onb.cols() != 2) throw std::invalid_argument("GridOracle: subspace dimension must be 1 or 2");
    for (int i = 0; i < steps; ++i) {
        const double t = std::numbers::pi * i / steps;
        visit(VectorXd(std::cos(t) * onb.col(0) + std::sin(t) * onb.col(1)));
    }
}

}  // namespace

MatrixXd gram_schmidt(const MatrixXd& m, double tol) {
    MatrixXd out(m.rows(), 0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        VectorXd v = m.col(j);
        const double scale = v.norm();
        if (scale == 0.0) continue;
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index i = 0; i < out.cols(); ++i) v -= out.col(i).dot(v) * out.col(i);
        if (v.norm() <= tol * scale) continue;
        out.conservativeResize(Eigen::NoChange, out.cols() + 1);
        out.col(out.cols() - 1) = v.normalized();
    }
    return out;
}

double GridOracle::max_angle(const MatrixXd& u, const MatrixXd& v) const {
    const MatrixXd a = gram_schmidt(u);
    const MatrixXd b = gram_schmidt(v);
    double best = 0.0;
    scan(a, steps, [&](const VectorXd& x) { best = std::max(best, angle_to(b, x)); });
    return best;
}

double GridOracle::min_angle(const MatrixXd& u, const MatrixXd& v) const {
    const int n = static_cast<int>(u.rows());
    const MatrixXd a = gram_schmidt(u);
    const MatrixXd b = gram_schmidt(v);
    if (a.cols() + b.cols() < n) return 0.0;
    MatrixXd stacked(n, a.cols() + b.cols());
    stacked << a, b;
    if (gram_schmidt(stacked, rank_tol).cols() < n) return 0.0;

    // W = (U^perp + V^perp)^perp.
    const MatrixXd ua = complement(a, n);
    const MatrixXd vb = complement(b, n);
    MatrixXd perps(n, ua.cols() + vb.cols());
    perps << ua, vb;
    const MatrixXd w = complement(gram_schmidt(perps, rank_tol), n);

    // Frame columns are unit vectors, so residuals below rank_tol are rounding.
    auto reduce = [&](const MatrixXd& frame) {
        MatrixXd r(n, 0);
        for (Eigen::Index j = 0; j < frame.cols(); ++j) {
            const VectorXd x = frame.col(j) - project(w, frame.col(j));
            if (x.norm() <= rank_tol) continue;
            r.conservativeResize(Eigen::NoChange, r.cols() + 1);
            r.col(r.cols() - 1) = x;
        }
        return gram_schmidt(r, rank_tol);
    };
    const MatrixXd uc = reduce(a);
    const MatrixXd vc = reduce(b);
    if (uc.cols() == 0 || vc.cols() == 0) return std::numbers::pi / 2.0;

    double best = std::numeric_limits<double>::infinity();
    scan(uc, steps, [&](const VectorXd& x) { best = std::min(best, angle_to(vc, x)); });
    return best;
}

}  // namespace detloci::verify
