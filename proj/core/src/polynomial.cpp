#include "detloci/chern/polynomial.hpp"

#include <algorithm>

namespace detloci::chern {

namespace {

std::string term_string(const Rational& c, int power, const char* var, bool first) {
    std::string out;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
        out += negative ? "-" : "";
    else
        out += negative ? " - " : " + ";
    const bool unit = mag == 1;
    if (power == 0 || !unit) out += exact::to_string(mag);
    if (power != 0) {
        if (!unit) out += "*";
        out += var;
        if (power != 1) out += "^" + std::to_string(power);
    }
    return out;
}

}  // namespace

KPolynomial::KPolynomial(Rational constant) : coeffs_{std::move(constant)} { trim(); }

KPolynomial::KPolynomial(int constant) : coeffs_{Rational(constant)} { trim(); }

KPolynomial::KPolynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

KPolynomial KPolynomial::k() { return monomial(Rational(1), 1); }

KPolynomial KPolynomial::monomial(Rational c, int power) {
    std::vector<Rational> v(static_cast<std::size_t>(power) + 1, Rational(0));
    v.back() = std::move(c);
    return KPolynomial(std::move(v));
}

void KPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational KPolynomial::coefficient(int power) const {
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(power)];
}

Rational KPolynomial::leading_coefficient() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

Rational KPolynomial::evaluate(const Rational& at) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

KPolynomial& KPolynomial::operator+=(const KPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

KPolynomial& KPolynomial::operator-=(const KPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

KPolynomial& KPolynomial::operator*=(const KPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

std::string KPolynomial::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (int p = degree(); p >= 0; --p) {
        const Rational& c = coeffs_[static_cast<std::size_t>(p)];
        if (c == 0) continue;
        out += term_string(c, p, "k", first);
        first = false;
    }
    return out;
}

InverseKSeries::InverseKSeries(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational InverseKSeries::coefficient(int j) const {
    if (j < 0 || j >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(j)];
}

std::string InverseKSeries::to_string() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        if (coeffs_[j] == 0) continue;
        out += term_string(coeffs_[j], -static_cast<int>(j), "k", first);
        first = false;
    }
    return out;
}

}  // namespace detloci::chern
