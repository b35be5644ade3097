#pragma once

#include "detloci/angles/subspace.hpp"
#include "detloci/chern/chern.hpp"
#include "detloci/exact/dense.hpp"
#include "detloci/grassmann/grassmann.hpp"

#include <random>

namespace detloci::suite::gen {

using Rng = std::mt19937_64;
using exact::Rational;

int uniform_int(Rng& rng, int lo, int hi);  // inclusive
double uniform_real(Rng& rng, double lo, double hi);

angles::Vector gaussian_vector(Rng& rng, int n);
angles::Matrix gaussian_matrix(Rng& rng, int rows, int cols);
angles::Matrix random_orthogonal(Rng& rng, int n);
/// Uniformly distributed d-dimensional subspace of R^n.
angles::Subspace random_subspace(Rng& rng, int n, int d);

/// A subspace of the same dimension as u with max_angle(u, result) equal to
/// `angle` exactly (up to rounding), obtained by tilting u along a random
/// normal direction.
angles::Subspace perturb(Rng& rng, const angles::Subspace& u, double angle);

grassmann::CMatrix gaussian_cmatrix(Rng& rng, int rows, int cols);

/// Gaussian-integer entries with real and imaginary parts in [-bound, bound].
exact::ExactMatrix integer_matrix(Rng& rng, int rows, int cols, int bound);
/// Product of random rows x k and k x cols integer matrices (rank <= k).
exact::ExactMatrix low_rank_integer_matrix(Rng& rng, int rows, int cols, int k, int bound);

/// p / q with |p| <= bound, 1 <= q <= bound.
Rational small_rational(Rng& rng, int bound);
/// Bundle of the given rank on an n-dimensional base, with small rational
/// constant Chern numbers.
chern::BundleSpec random_bundle(Rng& rng, int n, int rank);
/// A homogeneous class c h^degree with c a small rational polynomial in k.
chern::CohomologyClass random_homogeneous(Rng& rng, int n, int degree);

}  // namespace detloci::suite::gen
