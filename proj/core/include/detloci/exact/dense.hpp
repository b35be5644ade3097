#pragma once

// Generic dense-matrix algorithms shared by the floating-point (Eigen) and the
// exact rational backends. A matrix type M must provide `Scalar`, rows(),
// cols(), operator()(i, j) and a (rows, cols) constructor; Eigen::MatrixXcd
// and DenseMatrix<T> both qualify.

#include "detloci/errors.hpp"
#include "detloci/exact/rational.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

namespace detloci::exact {

template <class T>
class DenseMatrix {
public:
    using Scalar = T;

    DenseMatrix() = default;
    DenseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols), T(0)) {}
    DenseMatrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = static_cast<long>(init.size());
        cols_ = rows_ == 0 ? 0 : static_cast<long>(init.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_ * cols_));
        for (const auto& row : init) {
            if (static_cast<long>(row.size()) != cols_) throw DomainError("DenseMatrix: ragged initializer");
            for (const auto& x : row) data_.push_back(x);
        }
    }

    static DenseMatrix identity(long n) {
        DenseMatrix m(n, n);
        for (long i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    [[nodiscard]] long rows() const { return rows_; }
    [[nodiscard]] long cols() const { return cols_; }

    T& operator()(long i, long j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
    const T& operator()(long i, long j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        if (a.cols_ != b.rows_) throw DomainError("DenseMatrix: shape mismatch in product");
        DenseMatrix out(a.rows_, b.cols_);
        for (long i = 0; i < a.rows_; ++i)
            for (long k = 0; k < a.cols_; ++k) {
                if (a(i, k) == T(0)) continue;
                for (long j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
            }
        return out;
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    long rows_ = 0;
    long cols_ = 0;
    std::vector<T> data_;
};

using ExactMatrix = DenseMatrix<ExactComplex>;

// Pivot preference for elimination: magnitude for floating point, any
// nonzero entry for exact scalars.
inline double pivot_weight(const std::complex<double>& x) { return std::abs(x); }
inline double pivot_weight(double x) { return x < 0 ? -x : x; }
inline double pivot_weight(const ExactComplex& x) { return x.is_zero() ? 0.0 : 1.0; }
inline double pivot_weight(const Rational& x) { return x == 0 ? 0.0 : 1.0; }

/// Determinant by Gaussian elimination with partial pivoting (exact when the
/// scalar type is).
template <class M>
typename M::Scalar determinant(M a) {
    using S = typename M::Scalar;
    const long n = a.rows();
    if (n != a.cols()) throw DomainError("determinant: matrix is not square");
    S det(1);
    for (long col = 0; col < n; ++col) {
        long pivot = col;
        double best = pivot_weight(a(col, col));
        for (long i = col + 1; i < n; ++i) {
            const double w = pivot_weight(a(i, col));
            if (w > best) {
                best = w;
                pivot = i;
            }
        }
        if (best == 0.0) return S(0);
        if (pivot != col) {
            for (long j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
            det = -det;
        }
        const S p = a(col, col);
        det *= p;
        for (long i = col + 1; i < n; ++i) {
            if (pivot_weight(a(i, col)) == 0.0) continue;
            const S factor = a(i, col) / p;
            for (long j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
        }
    }
    return det;
}

/// Increasing l-subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> increasing_subsets(int n, int l);

/// Position of an increasing subset in the lexicographic enumeration.
std::size_t subset_rank(const std::vector<int>& subset, int n);

template <class M>
M submatrix(const M& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    M out(static_cast<long>(rows.size()), static_cast<long>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) out(static_cast<long>(i), static_cast<long>(j)) = a(rows[i], cols[j]);
    return out;
}

/// l-th compound matrix: entry (S, T) is the minor with row set S and column
/// set T, both enumerated lexicographically.
template <class M>
M compound(const M& a, int l) {
    const long n = a.rows();
    const long m = a.cols();
    if (l < 1 || l > n || l > m) throw DomainError("compound_matrix: order out of range");
    const auto row_sets = increasing_subsets(static_cast<int>(n), l);
    const auto col_sets = increasing_subsets(static_cast<int>(m), l);
    M out(static_cast<long>(row_sets.size()), static_cast<long>(col_sets.size()));
    for (std::size_t i = 0; i < row_sets.size(); ++i)
        for (std::size_t j = 0; j < col_sets.size(); ++j)
            out(static_cast<long>(i), static_cast<long>(j)) = determinant(submatrix(a, row_sets[i], col_sets[j]));
    return out;
}

}  // namespace detloci::exact
