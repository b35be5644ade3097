#pragma once

#include "detloci/exact/dense.hpp"
#include "detloci/exact/rational.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace detloci::grassmann {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using exact::ExactComplex;
using exact::ExactMatrix;

/// An r-plane in C^N: a full-rank r x N matrix modulo invertible row operations.
class GrassmannPoint {
public:
    /// Throws DomainError unless rank(matrix) = rows, judged by
    /// sigma_min > 1e-10 sigma_max.
    explicit GrassmannPoint(CMatrix matrix);

    /// Pi_0 = [I | 0].
    static GrassmannPoint base_point(int r, int n);

    [[nodiscard]] int rank() const { return static_cast<int>(matrix_.rows()); }
    [[nodiscard]] int ambient_dim() const { return static_cast<int>(matrix_.cols()); }
    [[nodiscard]] const CMatrix& matrix() const { return matrix_; }

    /// Equality of row spaces, within `tol` on the projection residual.
    [[nodiscard]] bool span_equals(const GrassmannPoint& other, double tol = 1e-9) const;

private:
    CMatrix matrix_;
};

/// Minors indexed by increasing r-subsets of {0..N-1} in lexicographic order;
/// defined up to a global scalar.
template <class Scalar>
struct PlueckerCoords {
    int r = 0;
    int n = 0;
    std::vector<Scalar> coords;

    /// Coordinate for an increasing 0-based subset.
    [[nodiscard]] const Scalar& at(const std::vector<int>& subset) const {
        return coords[exact::subset_rank(subset, n)];
    }
};

PlueckerCoords<Complex> pluecker_embed(const GrassmannPoint& p);

/// Exact variant; `matrix` must be r x N with r <= N.
PlueckerCoords<ExactComplex> pluecker_embed(const ExactMatrix& matrix);

/// Values of every quadratic Plücker relation
///   sum_s (-1)^s p[I + j_s] p[J - j_s],  |I| = r - 1, |J| = r + 1,
/// with signs taken from sorting the index sets. All zero exactly on the image
/// of the embedding.
std::vector<ExactComplex> pluecker_relations(const PlueckerCoords<ExactComplex>& p);
std::vector<Complex> pluecker_relations(const PlueckerCoords<Complex>& p);

/// Fubini–Study distance arccos(|<p,q>| / (|p||q|)) between Plücker vectors,
/// evaluated through the chord of the phase-aligned unit vectors so it stays
/// accurate at short range.
double fs_distance(const GrassmannPoint& p, const GrassmannPoint& q);

/// Psi_0(P) = A^{-1} B for P = [A | B]. Throws OutsideChartError when the
/// leading r x r block has condition number >= 1e12.
CMatrix chart_psi0(const GrassmannPoint& p);

/// [I | Z].
GrassmannPoint chart_inverse(const CMatrix& z);

/// Operator-norm distance from the identity of the Gram matrix of the
/// Fubini–Study metric in the real coordinates (Re z_jk, Im z_jk) of the
/// standard chart at Pi_0, obtained from central differences of fs_distance^2
/// (step 1e-5) with polarization for the off-diagonal entries.
double chart_isometry_defect(int r, int n);

/// l-th compound (wedge power); entry (S, T) is the l x l minor on rows S and
/// columns T, lexicographic. Satisfies compound(AB) = compound(A) compound(B).
CMatrix compound_matrix(const CMatrix& a, int l);
ExactMatrix compound_matrix(const ExactMatrix& a, int l);

/// A linear map phi: V -> W, stored as a (dim W) x (dim V) matrix.
struct MorphismSample {
    CMatrix matrix;

    [[nodiscard]] int source_dim() const { return static_cast<int>(matrix.cols()); }
    [[nodiscard]] int target_dim() const { return static_cast<int>(matrix.rows()); }
};

/// Number of singular values above tol times the largest (or tol absolute
/// when all vanish).
int rank_stratum(const MorphismSample& phi, double tol);

/// Exact rank of a rational matrix.
int exact_rank(const ExactMatrix& a);

/// Real codimension 2 (r_e - r)(r_f - r) of the rank-r stratum.
int expected_stratum_codimension(int r_e, int r_f, int r);

/// Complex rank of the real Jacobian of phi -> wedge^n phi (n = target dim),
/// by central differences (step 1e-6) over all 2 n m real coordinates,
/// threshold 1e-6 relative to the largest singular value.
/// Throws PreconditionError unless m >= n and phi has rank n.
int rank_variety_tangent_rank(const MorphismSample& phi);

/// Expected dimension m - n + 1 of R(V, W) as acceptance criterion 10 states
/// it; differs from the cone dimension whenever n > 1.
int rank_variety_stated_dimension(int m, int n);

/// Dimension n (m - n) + 1 of the affine cone over Gr(n, m), the actual image
/// of phi -> wedge^n phi.
int rank_variety_cone_dimension(int m, int n);

/// Curvature of the universal bundle U at a chart point Z of Gr(r, N),
/// contracted on (u, Ju): the r x r endomorphism -i R_U(u, Ju).
///
/// Uses the holomorphic frame f(Z) whose rows are (e_j, z_j*) and the local
/// formula R_{U*} = h^{-1} d\bar f^t ^ df - h^{-1} d\bar f^t f h^{-1} ^ \bar f^t df,
/// h = \bar f^t f, with R_U = -R_{U*}^t. Two-forms are evaluated with the
/// convention (a ^ b)(X, Y) = (a(X) b(Y) - a(Y) b(X)) / 2, which gives
/// -i R_U(e_jk, i e_jk) = -e_j e_j^*.
CMatrix curvature_endomorphism(const CMatrix& chart_point, const CMatrix& tangent);

struct CurvatureSample {
    CMatrix tangent;                  ///< r x (N - r), unit Frobenius norm
    std::vector<double> eigenvalues;  ///< ascending
    double max_imaginary_part = 0.0;  ///< largest |Im| among eigenvalues
    double top_exterior = 0.0;        ///< curvature on wedge^r U: trace of the endomorphism
};

struct CurvatureReport {
    int r = 0;
    int n = 0;
    std::vector<CurvatureSample> samples;

    [[nodiscard]] double max_eigenvalue() const;
    [[nodiscard]] double max_top_exterior() const;
};

/// Spectrum and trace of -i R_U(u, Ju) at Pi_0 for the normalized tangent.
CurvatureSample curvature_at_base(const CMatrix& tangent);

/// Samples `samples` seeded random unit tangents at Pi_0 (plus every
/// coordinate direction e_jk first) and records the spectrum of
/// -i R_U(u, Ju) and its trace.
CurvatureReport universal_curvature_at_base(int r, int n, int samples, std::uint64_t seed = 0xDE7C0C1);

}  // namespace detloci::grassmann
