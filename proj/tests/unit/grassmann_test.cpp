#include "detloci/errors.hpp"
#include "detloci/grassmann/grassmann.hpp"
#include "detloci/suite/generators.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace detloci;
using namespace detloci::grassmann;

namespace {

CMatrix real_matrix(int rows, int cols, std::initializer_list<double> values) {
    CMatrix m(rows, cols);
    auto it = values.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

ExactMatrix exact_real(int rows, int cols, std::initializer_list<int> values) {
    ExactMatrix m(rows, cols);
    auto it = values.begin();
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j) m(i, j) = *it++;
    return m;
}

}  // namespace

TEST_SUITE("grassmann") {

TEST_CASE("pluecker embedding examples") {
    const auto line = pluecker_embed(GrassmannPoint(real_matrix(1, 2, {3.0, -2.0})));
    REQUIRE(line.coords.size() == 2);
    CHECK(line.coords[0] == Complex(3.0));
    CHECK(line.coords[1] == Complex(-2.0));

    const auto base = pluecker_embed(GrassmannPoint::base_point(2, 4));
    CHECK(std::abs(base.at({0, 1}) - 1.0) < 1e-15);
    for (std::size_t i = 1; i < base.coords.size(); ++i) CHECK(std::abs(base.coords[i]) < 1e-15);

    const auto p = pluecker_embed(exact_real(2, 4, {1, 0, 1, 0, 0, 1, 0, 1}));
    const std::vector<ExactComplex> expected{1, 0, 1, -1, 0, 1};
    CHECK(p.coords == expected);
    const ExactComplex rel = p.at({0, 1}) * p.at({2, 3}) - p.at({0, 2}) * p.at({1, 3}) + p.at({0, 3}) * p.at({1, 2});
    CHECK(rel.is_zero());
    for (const auto& r : pluecker_relations(p)) CHECK(r.is_zero());
}

TEST_CASE("pluecker relations detect a non-decomposable vector") {
    PlueckerCoords<ExactComplex> p{2, 4, {1, 0, 0, 0, 0, 1}};  // e12 + e34
    bool any = false;
    for (const auto& r : pluecker_relations(p)) any = any || !r.is_zero();
    CHECK(any);
}

TEST_CASE("pluecker relations vanish on random rational planes") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = trial % 2 == 0 ? 4 : 5;
        const ExactMatrix m = suite::gen::integer_matrix(rng, 2, n, 6);
        if (exact_rank(m) < 2) continue;
        for (const auto& r : pluecker_relations(pluecker_embed(m))) CHECK(r.is_zero());
    }
}

TEST_CASE("row operations scale pluecker coordinates by the determinant") {
    std::mt19937_64 rng(32);
    for (int trial = 0; trial < 100; ++trial) {
        const ExactMatrix p = suite::gen::integer_matrix(rng, 2, 5, 5);
        const ExactMatrix g = suite::gen::integer_matrix(rng, 2, 2, 5);
        const auto before = pluecker_embed(p);
        const auto after = pluecker_embed(g * p);
        const ExactComplex det = exact::determinant(g);
        for (std::size_t i = 0; i < before.coords.size(); ++i) CHECK(after.coords[i] == det * before.coords[i]);
    }
}

TEST_CASE("Fubini-Study distance examples") {
    const GrassmannPoint base = GrassmannPoint::base_point(2, 4);
    CHECK(fs_distance(base, base) == doctest::Approx(0.0));
    const GrassmannPoint other(real_matrix(2, 4, {0, 0, 1, 0, 0, 0, 0, 1}));
    CHECK(fs_distance(base, other) == doctest::Approx(std::numbers::pi / 2));
    for (double theta : {0.0, 1e-7, 0.3, 1.0, std::numbers::pi / 2}) {
        const GrassmannPoint a(real_matrix(1, 2, {1.0, 0.0}));
        const GrassmannPoint b(real_matrix(1, 2, {std::cos(theta), std::sin(theta)}));
        CHECK(fs_distance(a, b) == doctest::Approx(theta).epsilon(1e-9));
    }
}

TEST_CASE("Fubini-Study distance is a metric on random triples") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const GrassmannPoint a(suite::gen::gaussian_cmatrix(rng, 2, 4));
        const GrassmannPoint b(suite::gen::gaussian_cmatrix(rng, 2, 4));
        const GrassmannPoint c(suite::gen::gaussian_cmatrix(rng, 2, 4));
        CHECK(fs_distance(a, b) == fs_distance(b, a));
        CHECK(fs_distance(a, c) <= fs_distance(a, b) + fs_distance(b, c) + 1e-9);
        const CMatrix g = suite::gen::gaussian_cmatrix(rng, 2, 2);
        CHECK(fs_distance(a, GrassmannPoint(g * a.matrix())) < 1e-7);
    }
}

TEST_CASE("standard chart") {
    const CMatrix b = real_matrix(2, 2, {1, 2, 3, 4});
    CMatrix ib(2, 4);
    ib << CMatrix::Identity(2, 2), b;
    CHECK((chart_psi0(GrassmannPoint(ib)) - b).norm() < 1e-14);

    const CMatrix z = chart_psi0(GrassmannPoint(real_matrix(2, 3, {2, 0, 4, 0, 1, 5})));
    REQUIRE(z.rows() == 2);
    REQUIRE(z.cols() == 1);
    CHECK(std::abs(z(0, 0) - 2.0) < 1e-14);
    CHECK(std::abs(z(1, 0) - 5.0) < 1e-14);

    CHECK_THROWS_AS(chart_psi0(GrassmannPoint(real_matrix(2, 4, {0, 0, 1, 0, 0, 0, 0, 1}))), OutsideChartError);

    std::mt19937_64 rng(3);
    const GrassmannPoint p(suite::gen::gaussian_cmatrix(rng, 2, 5));
    CHECK(chart_inverse(chart_psi0(p)).span_equals(p));
}

TEST_CASE("chart is an isometry at the base point") {
    CHECK(chart_isometry_defect(1, 2) <= 1e-6);
    CHECK(chart_isometry_defect(2, 4) <= 1e-6);
    CHECK(chart_isometry_defect(2, 5) <= 1e-6);
}

TEST_CASE("compound matrix examples") {
    std::mt19937_64 rng(8);
    const CMatrix a = suite::gen::gaussian_cmatrix(rng, 3, 4);
    CHECK((compound_matrix(a, 1) - a).norm() < 1e-14);
    const CMatrix sq = suite::gen::gaussian_cmatrix(rng, 3, 3);
    const CMatrix top = compound_matrix(sq, 3);
    REQUIRE(top.size() == 1);
    CHECK(std::abs(top(0, 0) - sq.determinant()) < 1e-12);
    CHECK(std::abs(compound_matrix(real_matrix(2, 2, {1, 2, 3, 4}), 2)(0, 0) + 2.0) < 1e-14);
    CHECK_THROWS_AS(compound_matrix(a, 0), DomainError);
    CHECK_THROWS_AS(compound_matrix(a, 4), DomainError);
}

TEST_CASE("Cauchy-Binet holds exactly") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = suite::gen::uniform_int(rng, 1, 4);
        const int k = suite::gen::uniform_int(rng, 1, 4);
        const int m = suite::gen::uniform_int(rng, 1, 4);
        const ExactMatrix a = suite::gen::integer_matrix(rng, n, k, 4);
        const ExactMatrix b = suite::gen::integer_matrix(rng, k, m, 4);
        for (int l = 1; l <= std::min({n, k, m}); ++l)
            CHECK(compound_matrix(a * b, l) == compound_matrix(a, l) * compound_matrix(b, l));
    }
}

TEST_CASE("rank strata") {
    CHECK(rank_stratum({CMatrix::Zero(3, 4)}, 1e-8) == 0);
    CHECK(expected_stratum_codimension(3, 4, 0) == 24);
    CMatrix padded = CMatrix::Zero(3, 4);
    padded(0, 0) = 1.0;
    padded(1, 1) = 1.0;
    CHECK(rank_stratum({padded}, 1e-8) == 2);
    CHECK(rank_stratum({real_matrix(2, 2, {1.0, 0.0, 0.0, 1e-12})}, 1e-8) == 1);
}

TEST_CASE("compound norm detects rank exactly") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int k = suite::gen::uniform_int(rng, 0, 3);
        const ExactMatrix m = suite::gen::low_rank_integer_matrix(rng, 3, 4, k, 4);
        const int rank = exact_rank(m);
        for (int l = 1; l <= 3; ++l) {
            bool nonzero = false;
            const ExactMatrix c = compound_matrix(m, l);
            for (long i = 0; i < c.rows(); ++i)
                for (long j = 0; j < c.cols(); ++j) nonzero = nonzero || !c(i, j).is_zero();
            CHECK((rank >= l) == nonzero);
        }
    }
}

TEST_CASE("rank variety tangent rank equals the cone dimension") {
    // The image of phi -> wedge^n phi is the affine cone over Gr(n, m), of
    // dimension n(m - n) + 1; this pins the computed value.
    std::mt19937_64 rng(13);
    CHECK(rank_variety_tangent_rank({real_matrix(1, 2, {1.0, 0.0})}) == 2);
    for (auto [m, n] : {std::pair{2, 1}, {3, 2}, {4, 2}, {4, 3}}) {
        const CMatrix phi = suite::gen::gaussian_cmatrix(rng, n, m);
        CHECK(rank_variety_tangent_rank({phi}) == rank_variety_cone_dimension(m, n));
        CHECK(rank_variety_cone_dimension(m, n) == n * (m - n) + 1);
        CHECK(rank_variety_stated_dimension(m, n) == m - n + 1);
    }
    CHECK_THROWS_AS(rank_variety_tangent_rank({CMatrix::Zero(2, 3)}), PreconditionError);
    CHECK_THROWS_AS(rank_variety_tangent_rank({suite::gen::gaussian_cmatrix(rng, 3, 2)}), PreconditionError);
}

TEST_CASE("universal bundle curvature at the base point") {
    CMatrix e11 = CMatrix::Zero(2, 2);
    e11(0, 0) = 1.0;
    const CurvatureSample s = curvature_at_base(e11);
    REQUIRE(s.eigenvalues.size() == 2);
    CHECK(s.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(0.0));
    CHECK(s.top_exterior == doctest::Approx(-1.0));

    for (auto [r, n] : {std::pair{2, 4}, {2, 5}, {1, 3}}) {
        const CurvatureReport rep = universal_curvature_at_base(r, n, 200, 99);
        CHECK(rep.max_eigenvalue() <= 1e-10);
        CHECK(rep.max_top_exterior() < 0.0);
        for (const auto& sample : rep.samples) CHECK(sample.max_imaginary_part <= 1e-9);
    }
}

TEST_CASE("grassmann point validation") {
    CHECK_THROWS_AS(GrassmannPoint(real_matrix(2, 3, {1, 2, 3, 2, 4, 6})), DomainError);
}

}  // TEST_SUITE
