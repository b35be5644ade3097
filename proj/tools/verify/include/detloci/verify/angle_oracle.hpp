#pragma once

#include <Eigen/Dense>

namespace detloci::verify {

/// Brute-force angles for small instances (ambient dim <= 4, subspace dims
/// <= 2). Bases are columns and need not be orthonormal. Uses its own
/// Gram–Schmidt and projections and scans the unit circle of the first
/// argument on a uniform grid.
struct GridOracle {
    int steps = 20000;
    double rank_tol = 1e-9;

    double max_angle(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const;
    double min_angle(const Eigen::MatrixXd& u, const Eigen::MatrixXd& v) const;
};

/// Orthonormal columns spanning the columns of `m`; dependent columns
/// (residual below tol times the column norm) are dropped.
Eigen::MatrixXd gram_schmidt(const Eigen::MatrixXd& m, double tol = 1e-9);

}  // namespace detloci::verify
