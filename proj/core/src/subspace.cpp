#include "detloci/angles/subspace.hpp"

#include "detloci/errors.hpp"

#include <string>

namespace detloci::angles {

Subspace Subspace::from_basis(const Matrix& basis, double rank_tol) {
    const auto n = static_cast<int>(basis.rows());
    if (n < 1) throw DomainError("Subspace: ambient dimension must be positive");
    if (basis.cols() < 1) throw DomainError("Subspace: empty basis");
    if (basis.cols() > basis.rows()) throw DomainError("Subspace: more basis vectors than the ambient dimension");
    if (!basis.allFinite()) throw DomainError("Subspace: non-finite basis entry");
    Eigen::ColPivHouseholderQR<Matrix> qr(basis);
    qr.setThreshold(rank_tol);
    if (qr.rank() < basis.cols())
        throw DomainError("Subspace: basis vectors are linearly dependent (rank " + std::to_string(qr.rank()) + " < " +
                          std::to_string(basis.cols()) + ")");
    Matrix q = qr.householderQ() * Matrix::Identity(basis.rows(), basis.cols());
    return {n, std::move(q)};
}

Subspace Subspace::from_vectors(int ambient_dim, const std::vector<std::vector<double>>& vectors) {
    Matrix basis(ambient_dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (static_cast<int>(vectors[j].size()) != ambient_dim)
            throw DomainError("Subspace: basis vector " + std::to_string(j) + " has length " +
                              std::to_string(vectors[j].size()) + ", expected " + std::to_string(ambient_dim));
        for (int i = 0; i < ambient_dim; ++i) basis(i, static_cast<Eigen::Index>(j)) = vectors[j][static_cast<std::size_t>(i)];
    }
    return from_basis(basis);
}

Subspace Subspace::coordinate(int ambient_dim, const std::vector<int>& axes) {
    Matrix basis = Matrix::Zero(ambient_dim, static_cast<Eigen::Index>(axes.size()));
    for (std::size_t j = 0; j < axes.size(); ++j) {
        if (axes[j] < 0 || axes[j] >= ambient_dim) throw DomainError("Subspace::coordinate: axis out of range");
        basis(axes[j], static_cast<Eigen::Index>(j)) = 1.0;
    }
    return from_orthonormal(basis);
}

Subspace Subspace::zero(int ambient_dim) { return {ambient_dim, Matrix(ambient_dim, 0)}; }

Subspace Subspace::whole(int ambient_dim) { return {ambient_dim, Matrix::Identity(ambient_dim, ambient_dim)}; }

Subspace Subspace::from_orthonormal(const Matrix& frame) {
    if (frame.cols() > frame.rows()) throw DomainError("Subspace: frame has more columns than rows");
    const Matrix gram = frame.transpose() * frame;
    if ((gram - Matrix::Identity(frame.cols(), frame.cols())).cwiseAbs().maxCoeff() > 1e-12 && frame.cols() > 0)
        throw DomainError("Subspace: frame is not orthonormal");
    return {static_cast<int>(frame.rows()), frame};
}

Subspace Subspace::orthogonal_complement() const {
    const Eigen::Index n = ambient_;
    const Eigen::Index d = frame_.cols();
    if (d == 0) return whole(ambient_);
    Eigen::HouseholderQR<Matrix> qr(frame_);
    Matrix q = qr.householderQ() * Matrix::Identity(n, n);
    return {ambient_, q.rightCols(n - d)};
}

Subspace Subspace::transformed(const Matrix& map) const {
    if (map.rows() != ambient_ || map.cols() != ambient_) throw DomainError("Subspace::transformed: shape mismatch");
    if (is_zero()) return *this;
    return from_basis(map * frame_);
}

bool Subspace::span_equals(const Subspace& other, double tol) const {
    if (ambient_ != other.ambient_ || dim() != other.dim()) return false;
    if (is_zero()) return true;
    const Matrix r1 = other.frame_ - frame_ * (frame_.transpose() * other.frame_);
    const Matrix r2 = frame_ - other.frame_ * (other.frame_.transpose() * frame_);
    return r1.norm() <= tol && r2.norm() <= tol;
}

Matrix relative_complement(const Matrix& frame, const Matrix& sub) {
    const Eigen::Index p = frame.cols();
    const Eigen::Index s = sub.cols();
    if (s == 0) return frame;
    if (s >= p) return Matrix(frame.rows(), 0);
    const Matrix coords = frame.transpose() * sub;
    Eigen::HouseholderQR<Matrix> qr(coords);
    const Matrix q = qr.householderQ() * Matrix::Identity(p, p);
    return frame * q.rightCols(p - s);
}

}  // namespace detloci::angles
