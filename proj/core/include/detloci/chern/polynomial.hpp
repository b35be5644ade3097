#pragma once

#include "detloci/exact/rational.hpp"

#include <string>
#include <vector>

namespace detloci::chern {

using exact::Rational;

/// Polynomial in the twist parameter k with exact rational coefficients.
class KPolynomial {
public:
    KPolynomial() = default;
    KPolynomial(Rational constant);  // NOLINT(google-explicit-constructor)
    KPolynomial(int constant);       // NOLINT(google-explicit-constructor)
    explicit KPolynomial(std::vector<Rational> coefficients);

    /// The monomial k.
    static KPolynomial k();
    static KPolynomial monomial(Rational c, int power);

    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] Rational coefficient(int power) const;
    [[nodiscard]] Rational leading_coefficient() const;
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] Rational evaluate(const Rational& at) const;

    KPolynomial& operator+=(const KPolynomial& o);
    KPolynomial& operator-=(const KPolynomial& o);
    KPolynomial& operator*=(const KPolynomial& o);

    friend KPolynomial operator+(KPolynomial a, const KPolynomial& b) { return a += b; }
    friend KPolynomial operator-(KPolynomial a, const KPolynomial& b) { return a -= b; }
    friend KPolynomial operator*(KPolynomial a, const KPolynomial& b) { return a *= b; }
    friend KPolynomial operator-(const KPolynomial& a) { return KPolynomial(0) - a; }
    friend bool operator==(const KPolynomial& a, const KPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// e.g. "64*k^3 - 12*k^2 + 1/2".
    [[nodiscard]] std::string to_string() const;

private:
    void trim();
    std::vector<Rational> coeffs_;  // coeffs_[j] multiplies k^j; no trailing zeros
};

/// a_0 + a_1 k^{-1} + a_2 k^{-2} + ...: a Chern number divided by vol(M) = k^n.
class InverseKSeries {
public:
    InverseKSeries() = default;
    explicit InverseKSeries(std::vector<Rational> coefficients);

    /// Coefficient of k^{-j}.
    [[nodiscard]] Rational coefficient(int j) const;
    /// Value as k -> infinity.
    [[nodiscard]] Rational leading() const { return coefficient(0); }
    [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const InverseKSeries& a, const InverseKSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

}  // namespace detloci::chern
