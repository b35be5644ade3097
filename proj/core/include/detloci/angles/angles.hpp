#pragma once

#include "detloci/angles/subspace.hpp"

#include <compare>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace detloci::angles {

/// Angle in radians: [0, pi] between vectors, [0, pi/2] involving subspaces.
class Angle {
public:
    constexpr Angle() = default;
    explicit Angle(double radians);

    [[nodiscard]] constexpr double radians() const { return value_; }
    friend constexpr auto operator<=>(Angle, Angle) = default;

private:
    double value_ = 0.0;
};

Angle angle_between(const Vector& u, const Vector& v);

/// Angle of u with its orthogonal projection onto V; pi/2 when the
/// projection is below 1e-12 |u|.
Angle angle_to_subspace(const Vector& u, const Subspace& v);

/// Largest angle a unit vector of U makes with V.
///
/// For orthonormal frames A (of U) and B (of V), a unit u = A x has
/// cos angle(u, V) = |B^T A x| and sin angle(u, V) = |(I - B B^T) A x|, so
/// the maximum is arccos(sigma_min(B^T A)) (taking sigma_min = 0 when
/// dim U > dim V). The sine side, sigma_max((I - B B^T) A), is attained by the
/// same x; both are combined through atan2 so small angles keep full
/// relative precision instead of the ~1e-8 floor of arccos near 1.
Angle max_angle(const Subspace& u, const Subspace& v);

/// All principal angles between U and V, ascending (min(dim U, dim V) values).
std::vector<double> principal_angles(const Subspace& u, const Subspace& v);

/// Smallest angle between any nonzero u in U and v in V (the first principal
/// angle); pi/2 when either side is zero.
Angle first_principal_angle(const Subspace& u, const Subspace& v);

/// U + V = R^n, decided by the n-th singular value of [A | B] exceeding tol.
bool is_transversal(const Subspace& u, const Subspace& v, double tol = kDefaultTol);

/// U ∩ V as the span of principal vectors of U whose principal angle has
/// sin <= tol, the same scale on which is_transversal decides. Returns the
/// zero subspace when there are none.
Subspace intersect(const Subspace& u, const Subspace& v, double tol = kDefaultTol);

/// Minimum angle. Zero when dim U + dim V < n or U + V != R^n; otherwise the
/// least angle from the complement of W = U ∩ V in U to the complement of W
/// in V (pi/2 when one of those complements is zero).
Angle min_angle(const Subspace& u, const Subspace& v, double tol = kDefaultTol);

/// Same quantity through the orthogonal complements: the first principal
/// angle between U^⊥ and V^⊥.
Angle min_angle_dual(const Subspace& u, const Subspace& v);

/// Linear complex structure on R^{2n}.
class ComplexStructure {
public:
    /// J e_{2i-1} = e_{2i} (1-based), i.e. the standard identification with C^n.
    explicit ComplexStructure(int ambient_dim);
    /// Arbitrary J; throws DomainError unless J^2 = -I within 1e-12.
    explicit ComplexStructure(Matrix j);

    [[nodiscard]] int ambient_dim() const { return static_cast<int>(j_.rows()); }
    [[nodiscard]] const Matrix& matrix() const { return j_; }
    [[nodiscard]] Subspace apply(const Subspace& v) const { return v.transformed(j_); }

private:
    Matrix j_;
};

/// beta(V) = max_angle(V, JV) for even-dimensional V.
Angle complex_angle(const Subspace& v, const ComplexStructure& j);
bool is_complex_subspace(const Subspace& v, const ComplexStructure& j, double tol = kDefaultTol);
bool is_symplectic_subspace(const Subspace& v, const ComplexStructure& j, double tol = kDefaultTol);

struct HolomorphicityFit {
    bool exactly_holomorphic = false;
    double exponent = 0.0;  ///< slope of log beta against log k
    double constant = 0.0;  ///< C in beta ~ C k^exponent
    std::size_t samples_used = 0;
    bool pass = false;      ///< exponent <= -0.5 + 0.1
};

/// Least-squares fit of log beta(V_k) = log C + e log k over the samples with
/// beta > 0. Requires at least three samples with strictly increasing k.
HolomorphicityFit asymptotic_holomorphicity_rate(std::span<const std::pair<int, Subspace>> samples,
                                                 const ComplexStructure& j);

struct TransversalitySample {
    double distance = 0.0;
    Subspace tangent_image;
    Subspace distribution_plane;
};

struct SigmaTransverseResult {
    bool transverse = true;
    std::optional<std::size_t> first_violation;
};

/// Every sample closer than sigma must have min_angle(tangent, distribution) > sigma - tol.
SigmaTransverseResult check_sigma_transverse(std::span<const TransversalitySample> samples, double sigma,
                                             double tol = kDefaultTol);

struct BridgeBound {
    double theta_norm = std::numeric_limits<double>::infinity();
    double angle_lower_bound = 0.0;
    Angle observed;
};

/// Norm of the minimal right inverse of the projection h: U -> V^⊥, the
/// implied lower bound 1/|theta| on the minimum angle, and min_angle(U, V)
/// itself. When h is not onto: theta_norm = inf and bound 0.
BridgeBound bridge_angle_bound(const Subspace& u, const Subspace& v, double tol = kDefaultTol);

}  // namespace detloci::angles
