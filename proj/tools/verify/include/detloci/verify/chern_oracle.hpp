#pragma once

#include "detloci/chern/chern.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace detloci::verify {

using exact::Rational;

/// Naive re-expansion of the determinantal invariants at a fixed numeric
/// twist k. Works in Q[h]/(h^{n+1}) with plain coefficient vectors: twists as
/// sum_i c_i h^i (1 + t h)^{rank - i}, quotients by forward substitution,
/// determinants by cofactor expansion.
struct NaiveValues {
    Rational vol{0};
    std::optional<Rational> n1, n11, n2;
};

NaiveValues naive_invariants(const chern::DeterminantalProblem& p, const Rational& k);

/// Compares the exact invariants with naive_invariants at k = 1..n+2, which
/// pins polynomials of k-degree <= n + 1. Returns an empty string on
/// agreement, otherwise a description of the first mismatch.
std::string compare_with_naive(const chern::DeterminantalProblem& p);

/// A random problem whose locus has dimension 1 or 2, with small rational
/// Chern numbers and n <= 7.
chern::DeterminantalProblem random_small_problem(std::mt19937_64& rng);

}  // namespace detloci::verify
