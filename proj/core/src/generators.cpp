#include "detloci/suite/generators.hpp"

#include <cmath>

namespace detloci::suite::gen {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

angles::Vector gaussian_vector(Rng& rng, int n) {
    std::normal_distribution<double> g;
    angles::Vector v(n);
    for (int i = 0; i < n; ++i) v(i) = g(rng);
    return v;
}

angles::Matrix gaussian_matrix(Rng& rng, int rows, int cols) {
    std::normal_distribution<double> g;
    angles::Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = g(rng);
    return m;
}

angles::Matrix random_orthogonal(Rng& rng, int n) {
    Eigen::HouseholderQR<angles::Matrix> qr(gaussian_matrix(rng, n, n));
    angles::Matrix q = qr.householderQ();
    const angles::Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < n; ++i)
        if (r(i, i) < 0) q.col(i) = -q.col(i);
    return q;
}

angles::Subspace random_subspace(Rng& rng, int n, int d) {
    if (d == 0) return angles::Subspace::zero(n);
    return angles::Subspace::from_basis(gaussian_matrix(rng, n, d));
}

angles::Subspace perturb(Rng& rng, const angles::Subspace& u, double angle) {
    const int n = u.ambient_dim();
    const int d = u.dim();
    if (d == 0 || d == n || angle == 0.0) return u;
    const angles::Matrix& a = u.frame();
    angles::Matrix g = gaussian_matrix(rng, n, d);
    g -= a * (a.transpose() * g);
    const double smax = Eigen::JacobiSVD<angles::Matrix>(g).singularValues()(0);
    // Principal angles of span(A + G) against span(A) are atan(sigma_i(G)) when A^T G = 0.
    const angles::Matrix tilted = a + g * (std::tan(angle) / smax);
    return angles::Subspace::from_basis(tilted);
}

grassmann::CMatrix gaussian_cmatrix(Rng& rng, int rows, int cols) {
    std::normal_distribution<double> g;
    grassmann::CMatrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = grassmann::Complex(g(rng), g(rng));
    return m;
}

exact::ExactMatrix integer_matrix(Rng& rng, int rows, int cols, int bound) {
    exact::ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = exact::ExactComplex{Rational(uniform_int(rng, -bound, bound)),
                                          Rational(uniform_int(rng, -bound, bound))};
    return m;
}

exact::ExactMatrix low_rank_integer_matrix(Rng& rng, int rows, int cols, int k, int bound) {
    if (k == 0) return exact::ExactMatrix(rows, cols);
    return integer_matrix(rng, rows, k, bound) * integer_matrix(rng, k, cols, bound);
}

Rational small_rational(Rng& rng, int bound) {
    return Rational(uniform_int(rng, -bound, bound)) / Rational(uniform_int(rng, 1, bound));
}

chern::BundleSpec random_bundle(Rng& rng, int n, int rank) {
    std::vector<Rational> numbers;
    for (int p = 1; p <= std::min(rank, n); ++p) numbers.push_back(small_rational(rng, 3));
    return chern::BundleSpec::make(rank, chern::CohomologyClass::total_from_numbers(n, numbers));
}

chern::CohomologyClass random_homogeneous(Rng& rng, int n, int degree) {
    std::vector<Rational> coeffs;
    const int kdeg = uniform_int(rng, 0, 2);
    for (int i = 0; i <= kdeg; ++i) coeffs.push_back(small_rational(rng, 4));
    chern::KPolynomial c(std::move(coeffs));
    if (c.is_zero()) c = chern::KPolynomial(1);
    return chern::CohomologyClass::monomial(n, degree, std::move(c));
}

}  // namespace detloci::suite::gen
