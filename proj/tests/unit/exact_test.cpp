#include "detloci/exact/dense.hpp"
#include "detloci/exact/rational.hpp"

#include <doctest.h>

#include <random>

using namespace detloci::exact;

TEST_SUITE("exact") {

TEST_CASE("parse and print rationals") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(parse_rational("-4/8") == Rational(-1, 2));
    CHECK(to_string(Rational(-20, 3)) == "-20/3");
    CHECK(to_string(Rational(12)) == "12");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(3, -1) == 0);
    // Pascal's rule as an independent check.
    for (long n = 1; n < 20; ++n)
        for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("subset enumeration is lexicographic and ranked") {
    const auto s = increasing_subsets(4, 2);
    REQUIRE(s.size() == 6);
    CHECK(s.front() == std::vector<int>{0, 1});
    CHECK(s[2] == std::vector<int>{0, 3});
    CHECK(s.back() == std::vector<int>{2, 3});
    for (int n = 1; n <= 6; ++n)
        for (int l = 1; l <= n; ++l) {
            const auto all = increasing_subsets(n, l);
            CHECK(all.size() == static_cast<std::size_t>(binomial(n, l)));
            for (std::size_t i = 0; i < all.size(); ++i) CHECK(subset_rank(all[i], n) == i);
        }
}

TEST_CASE("exact determinant against the Leibniz expansion") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int trial = 0; trial < 30; ++trial) {
        ExactMatrix a(3, 3);
        for (long i = 0; i < 3; ++i)
            for (long j = 0; j < 3; ++j) a(i, j) = ExactComplex{Rational(d(rng)), Rational(d(rng))};
        const ExactComplex lz = a(0, 0) * a(1, 1) * a(2, 2) + a(0, 1) * a(1, 2) * a(2, 0) +
                                a(0, 2) * a(1, 0) * a(2, 1) - a(0, 2) * a(1, 1) * a(2, 0) -
                                a(0, 0) * a(1, 2) * a(2, 1) - a(0, 1) * a(1, 0) * a(2, 2);
        CHECK(determinant(a) == lz);
    }
}

TEST_CASE("compound of a 2x2 integer matrix") {
    ExactMatrix a(2, 2);
    a(0, 0) = 1;
    a(0, 1) = 2;
    a(1, 0) = 3;
    a(1, 1) = 4;
    const ExactMatrix c = compound(a, 2);
    REQUIRE(c.rows() == 1);
    CHECK(c(0, 0) == ExactComplex(-2));
    CHECK(compound(a, 1) == a);
}

}  // TEST_SUITE
