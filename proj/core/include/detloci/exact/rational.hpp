#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace detloci::exact {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", "p" or "-p/q". Throws DomainError on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

Rational binomial(long n, long k);

/// Complex number with arbitrary-precision rational parts.
struct ExactComplex {
    Rational re{0};
    Rational im{0};

    ExactComplex() = default;
    ExactComplex(Rational real) : re(std::move(real)) {}  // NOLINT(google-explicit-constructor)
    ExactComplex(Rational real, Rational imag) : re(std::move(real)), im(std::move(imag)) {}
    ExactComplex(int real) : re(real) {}  // NOLINT(google-explicit-constructor)

    [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
    [[nodiscard]] ExactComplex conj() const { return {re, -im}; }
    [[nodiscard]] Rational norm_squared() const { return re * re + im * im; }

    ExactComplex& operator+=(const ExactComplex& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    ExactComplex& operator-=(const ExactComplex& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    ExactComplex& operator*=(const ExactComplex& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    ExactComplex& operator/=(const ExactComplex& o);

    friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
    friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
    friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
    friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
    friend ExactComplex operator-(const ExactComplex& a) { return {-a.re, -a.im}; }
    friend bool operator==(const ExactComplex& a, const ExactComplex& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const ExactComplex& value);

}  // namespace detloci::exact
