#pragma once

#include <Eigen/Dense>

#include <vector>

namespace detloci::angles {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default threshold for rank and transversality decisions.
inline constexpr double kDefaultTol = 1e-9;

/// Linear subspace of R^n held as an orthonormal frame (n x dim).
///
/// Construction orthonormalizes the given spanning vectors with a
/// column-pivoted Householder QR, so callers may pass any basis. The zero
/// subspace exists only as the result of an intersection; every angle
/// operation rejects it.
class Subspace {
public:
    /// The zero subspace of R^0; a placeholder for aggregate initialization.
    Subspace() = default;

    /// Columns of `basis` span the subspace. Throws DomainError when the
    /// columns are linearly dependent (relative threshold `rank_tol`) or empty.
    static Subspace from_basis(const Matrix& basis, double rank_tol = 1e-12);

    /// Row-major vectors, as in the JSON subspace format.
    static Subspace from_vectors(int ambient_dim, const std::vector<std::vector<double>>& vectors);

    /// Span of the listed standard basis vectors (0-based).
    static Subspace coordinate(int ambient_dim, const std::vector<int>& axes);

    static Subspace zero(int ambient_dim);
    static Subspace whole(int ambient_dim);

    /// Frame must already be orthonormal; checked to 1e-12 and rejected otherwise.
    static Subspace from_orthonormal(const Matrix& frame);

    [[nodiscard]] int ambient_dim() const { return ambient_; }
    [[nodiscard]] int dim() const { return static_cast<int>(frame_.cols()); }
    [[nodiscard]] bool is_zero() const { return dim() == 0; }
    [[nodiscard]] const Matrix& frame() const { return frame_; }

    [[nodiscard]] Matrix projector() const { return frame_ * frame_.transpose(); }
    [[nodiscard]] Vector project(const Vector& u) const { return frame_ * (frame_.transpose() * u); }

    /// Frame of the orthogonal complement in R^n (possibly zero).
    [[nodiscard]] Subspace orthogonal_complement() const;

    /// Image under a linear map of R^n; re-orthonormalized.
    [[nodiscard]] Subspace transformed(const Matrix& map) const;

    /// Same column span: mutual projection residuals at most `tol`.
    [[nodiscard]] bool span_equals(const Subspace& other, double tol = 1e-9) const;

private:
    Subspace(int ambient, Matrix frame) : ambient_(ambient), frame_(std::move(frame)) {}

    int ambient_ = 0;
    Matrix frame_;
};

/// Orthonormal basis of the complement of span(columns of `sub`) inside
/// span(columns of `frame`), where `sub` lies in that span. Both inputs are
/// orthonormal frames.
Matrix relative_complement(const Matrix& frame, const Matrix& sub);

}  // namespace detloci::angles
