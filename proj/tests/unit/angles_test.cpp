#include "detloci/angles/angles.hpp"
#include "detloci/errors.hpp"
#include "detloci/suite/generators.hpp"
#include "detloci/verify/angle_oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

using namespace detloci;
using namespace detloci::angles;

namespace {

constexpr double kPi = std::numbers::pi;

Vector e(int n, int i) { return Vector::Unit(n, i); }

Subspace span(const std::vector<Vector>& vs) {
    Matrix m(vs.front().size(), static_cast<Eigen::Index>(vs.size()));
    for (std::size_t j = 0; j < vs.size(); ++j) m.col(static_cast<Eigen::Index>(j)) = vs[j];
    return Subspace::from_basis(m);
}

// Maximum over the unit circle of V = span(a, b) (a, b orthonormal) of the
// angle to the subspace spanned by the orthonormal columns of w.
double circle_max_angle(const Vector& a, const Vector& b, const Matrix& w, int steps = 200000) {
    double best = 0.0;
    for (int i = 0; i < steps; ++i) {
        const double t = kPi * i / steps;
        const Vector x = std::cos(t) * a + std::sin(t) * b;
        const Vector p = w * (w.transpose() * x);
        best = std::max(best, std::atan2((x - p).norm(), p.norm()));
    }
    return best;
}

}  // namespace

TEST_SUITE("angles") {

TEST_CASE("angle between vectors") {
    CHECK(angle_between(e(3, 0), e(3, 0)).radians() == doctest::Approx(0.0));
    CHECK(angle_between(e(3, 0), e(3, 1)).radians() == doctest::Approx(kPi / 2));
    CHECK(angle_between(e(3, 0), -e(3, 0)).radians() == doctest::Approx(kPi));
    CHECK_THROWS_AS(angle_between(Vector::Zero(3), e(3, 0)), DomainError);
}

TEST_CASE("angle between a vector and a subspace") {
    const Subspace xy = Subspace::coordinate(3, {0, 1});
    CHECK(angle_to_subspace(e(3, 2), xy).radians() == doctest::Approx(kPi / 2));
    CHECK(angle_to_subspace(e(3, 0), xy).radians() == doctest::Approx(0.0));
    const Vector u = std::cos(0.3) * e(3, 0) + std::sin(0.3) * e(3, 2);
    CHECK(angle_to_subspace(u, xy).radians() == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(angle_to_subspace(Vector::Zero(3), xy), DomainError);
}

TEST_CASE("max angle examples") {
    const Subspace u = Subspace::coordinate(4, {0, 1});
    CHECK(max_angle(u, u).radians() == doctest::Approx(0.0));
    CHECK(max_angle(u, Subspace::coordinate(4, {0, 2})).radians() == doctest::Approx(kPi / 2));
    const Subspace line = span({std::cos(0.7) * e(2, 0) + std::sin(0.7) * e(2, 1)});
    CHECK(max_angle(line, Subspace::coordinate(2, {0})).radians() == doctest::Approx(0.7).epsilon(1e-12));
}

TEST_CASE("small max angles keep relative precision") {
    const double theta = 1e-10;
    const Subspace line = span({std::cos(theta) * e(3, 0) + std::sin(theta) * e(3, 2)});
    CHECK(max_angle(line, Subspace::coordinate(3, {0, 1})).radians() == doctest::Approx(theta).epsilon(1e-6));
}

TEST_CASE("intersection examples") {
    const Subspace w = intersect(Subspace::coordinate(3, {0, 1}), Subspace::coordinate(3, {1, 2}));
    CHECK(w.dim() == 1);
    CHECK(w.span_equals(Subspace::coordinate(3, {1})));

    CHECK(intersect(Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1})).is_zero());

    const Subspace v = span({e(3, 0) + e(3, 1), e(3, 2)});
    const Subspace diag = intersect(Subspace::coordinate(3, {0, 1}), v);
    CHECK(diag.dim() == 1);
    CHECK(diag.span_equals(span({(e(3, 0) + e(3, 1)) / std::sqrt(2.0)})));
}

TEST_CASE("min angle examples") {
    CHECK(min_angle(Subspace::coordinate(3, {0}), Subspace::coordinate(3, {1})).radians() == 0.0);
    CHECK(min_angle(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})).radians() == doctest::Approx(kPi / 2));

    const double theta = 0.4;
    const Vector tilted = std::cos(theta) * e(3, 0) + std::sin(theta) * e(3, 2);
    const Subspace u = Subspace::coordinate(3, {0, 1});
    const Subspace v = span({e(3, 1), tilted});
    CHECK(min_angle(u, v).radians() == doctest::Approx(theta).epsilon(1e-12));
    CHECK(min_angle_dual(u, v).radians() == doctest::Approx(theta).epsilon(1e-12));

    // Dense sampling of the two complements of W = span(e2): both are lines.
    const verify::GridOracle oracle;
    Matrix ub(3, 2), vb(3, 2);
    ub << e(3, 0), e(3, 1);
    vb << e(3, 1), tilted;
    CHECK(oracle.min_angle(ub, vb) == doctest::Approx(theta).epsilon(1e-6));

    CHECK_THROWS_AS(min_angle(u, v, 0.0), DomainError);
    CHECK_THROWS_AS(min_angle(u, v, -1.0), DomainError);
}

TEST_CASE("min angle of equal subspaces is zero and of complements is a right angle") {
    const Subspace u = Subspace::coordinate(4, {0, 1});
    CHECK(min_angle(u, u).radians() == 0.0);
    CHECK(min_angle(u, u.orthogonal_complement()).radians() == doctest::Approx(kPi / 2));
}

TEST_CASE("complex angle examples") {
    const ComplexStructure j(4);
    CHECK(complex_angle(span({e(4, 0), e(4, 1)}), j).radians() == doctest::Approx(0.0));
    CHECK(complex_angle(Subspace::coordinate(4, {0, 2}), j).radians() == doctest::Approx(kPi / 2));

    const double theta = 0.5;
    const Vector b = std::cos(theta) * e(4, 1) + std::sin(theta) * e(4, 2);
    const Subspace v = span({e(4, 0), b});
    // JV = span(J e1, J b) = span(e2, -cos(theta) e1 + sin(theta) e4).
    Matrix jv(4, 2);
    jv.col(0) = e(4, 1);
    jv.col(1) = -std::cos(theta) * e(4, 0) + std::sin(theta) * e(4, 3);
    const double brute = circle_max_angle(e(4, 0), b, jv);
    CHECK(complex_angle(v, j).radians() == doctest::Approx(brute).epsilon(1e-6));
    CHECK(is_symplectic_subspace(v, j));
    CHECK_FALSE(is_complex_subspace(v, j));

    CHECK_THROWS_AS(complex_angle(Subspace::coordinate(4, {0}), j), DomainError);
    CHECK_THROWS_AS(ComplexStructure(Matrix::Identity(4, 4)), DomainError);
}

TEST_CASE("asymptotic holomorphicity fit") {
    const ComplexStructure j(4);
    auto family = [](double (*beta)(int)) {
        std::vector<std::pair<int, Subspace>> s;
        for (int k : {4, 16, 64, 256}) {
            const double t = beta(k);
            s.emplace_back(k, span({e(4, 0), std::cos(t) * e(4, 1) + std::sin(t) * e(4, 2)}));
        }
        return s;
    };

    const auto half = family([](int k) { return 1.0 / std::sqrt(static_cast<double>(k)); });
    for (const auto& [k, v] : half) CHECK(complex_angle(v, j).radians() == doctest::Approx(1.0 / std::sqrt(k)));
    const auto fit = asymptotic_holomorphicity_rate(half, j);
    CHECK_FALSE(fit.exactly_holomorphic);
    CHECK(fit.exponent == doctest::Approx(-0.5).epsilon(0.1));
    CHECK(std::abs(fit.exponent + 0.5) < 0.05);
    CHECK(fit.pass);

    const auto fast = asymptotic_holomorphicity_rate(family([](int k) { return 1.0 / k; }), j);
    CHECK(std::abs(fast.exponent + 1.0) < 0.05);
    CHECK(fast.pass);

    std::vector<std::pair<int, Subspace>> flat;
    for (int k : {1, 2, 3}) flat.emplace_back(k, span({e(4, 0), e(4, 1)}));
    const auto hol = asymptotic_holomorphicity_rate(flat, j);
    CHECK(hol.exactly_holomorphic);
    CHECK(hol.pass);

    CHECK_THROWS(asymptotic_holomorphicity_rate(std::span(flat).first(2), j));
}

TEST_CASE("sigma transversality") {
    const Subspace a = Subspace::coordinate(4, {0, 1});
    const Subspace b = Subspace::coordinate(4, {2, 3});
    std::vector<TransversalitySample> far{{2.0, a, a}, {1.5, a, a}};
    CHECK(check_sigma_transverse(far, 1.0).transverse);

    std::vector<TransversalitySample> orth{{0.0, a, b}};
    CHECK(check_sigma_transverse(orth, 1.0).transverse);

    std::vector<TransversalitySample> same{{0.0, a, a}};
    const auto r = check_sigma_transverse(same, 0.1);
    CHECK_FALSE(r.transverse);
    REQUIRE(r.first_violation.has_value());
    CHECK(*r.first_violation == 0);
}

TEST_CASE("bridge bound examples") {
    const Subspace v = Subspace::coordinate(4, {0, 1});
    const BridgeBound perp = bridge_angle_bound(v.orthogonal_complement(), v);
    CHECK(perp.theta_norm == doctest::Approx(1.0));
    CHECK(perp.angle_lower_bound == doctest::Approx(1.0));
    CHECK(perp.observed.radians() == doctest::Approx(kPi / 2));
    CHECK(perp.observed.radians() > perp.angle_lower_bound);

    const BridgeBound same = bridge_angle_bound(v, v);
    CHECK(std::isinf(same.theta_norm));
    CHECK(same.angle_lower_bound == 0.0);
    CHECK(same.observed.radians() == 0.0);
}

TEST_CASE("bridge bound holds on random transversal pairs in R^6") {
    std::mt19937_64 rng(606);
    int checked = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const int p = suite::gen::uniform_int(rng, 1, 5);
        const int q = suite::gen::uniform_int(rng, 6 - p, 5);
        const Subspace u = suite::gen::random_subspace(rng, 6, p);
        const Subspace v = suite::gen::random_subspace(rng, 6, q);
        const BridgeBound b = bridge_angle_bound(u, v);
        if (std::isinf(b.theta_norm)) continue;
        ++checked;
        CHECK(b.observed.radians() > b.angle_lower_bound - 1e-9);
    }
    CHECK(checked > 1000);
}

TEST_CASE("two min angle routes agree on random transversal pairs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = suite::gen::uniform_int(rng, 2, 7);
        const int p = suite::gen::uniform_int(rng, 1, n);
        const int q = suite::gen::uniform_int(rng, std::max(1, n - p), n);
        const Subspace u = suite::gen::random_subspace(rng, n, p);
        const Subspace v = suite::gen::random_subspace(rng, n, q);
        REQUIRE(is_transversal(u, v));
        CHECK(std::abs(min_angle(u, v).radians() - min_angle_dual(u, v).radians()) <= 1e-9);
    }
}

TEST_CASE("grid oracle agrees with max angle on low dimensional pairs") {
    std::mt19937_64 rng(5);
    const verify::GridOracle oracle;
    for (int trial = 0; trial < 40; ++trial) {
        const int n = suite::gen::uniform_int(rng, 2, 4);
        const int p = suite::gen::uniform_int(rng, 1, 2);
        const int q = suite::gen::uniform_int(rng, 1, std::min(2, n));
        const Subspace u = suite::gen::random_subspace(rng, n, p);
        const Subspace v = suite::gen::random_subspace(rng, n, q);
        CHECK(std::abs(max_angle(u, v).radians() - oracle.max_angle(u.frame(), v.frame())) < 1e-3);
    }
}

TEST_CASE("subspace construction") {
    const Subspace s = Subspace::from_vectors(3, {{1, 1, 0}, {0, 0, 5}});
    CHECK(s.dim() == 2);
    CHECK((s.frame().transpose() * s.frame() - Matrix::Identity(2, 2)).norm() < 1e-12);
    CHECK(s.span_equals(span({e(3, 0) + e(3, 1), e(3, 2)})));
    CHECK_THROWS_AS(Subspace::from_vectors(3, {{1, 1, 0}, {2, 2, 0}}), DomainError);
    CHECK_THROWS_AS(Subspace::from_vectors(3, {{1, 2}}), DomainError);
}

}  // TEST_SUITE
