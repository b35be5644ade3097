#include "detloci/exact/dense.hpp"
#include "detloci/exact/rational.hpp"

#include "detloci/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace detloci::exact {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
    std::size_t start = 0;
    if (text[0] == '+' || text[0] == '-') start = 1;
    if (start == text.size()) throw DomainError("malformed rational: '" + std::string(whole) + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw DomainError("malformed rational: '" + std::string(whole) + "'");
    return Integer(std::string(text));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view t = trim(text);
    const auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    const Integer num = parse_integer(trim(t.substr(0, slash)), text);
    const Integer den = parse_integer(trim(t.substr(slash + 1)), text);
    if (den == 0) throw DomainError("rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Rational& value) {
    const Integer num = boost::multiprecision::numerator(value);
    const Integer den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    Integer out = 1;
    k = std::min(k, n - k);
    for (long i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return Rational(out);
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
    const Rational d = o.norm_squared();
    if (d == 0) throw DomainError("ExactComplex: division by zero");
    Rational r = (re * o.re + im * o.im) / d;
    Rational i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

std::string to_string(const ExactComplex& value) {
    if (value.im == 0) return to_string(value.re);
    return "(" + to_string(value.re) + "," + to_string(value.im) + ")";
}

std::vector<std::vector<int>> increasing_subsets(int n, int l) {
    std::vector<std::vector<int>> out;
    if (l < 0 || l > n) return out;
    std::vector<int> cur(static_cast<std::size_t>(l));
    std::iota(cur.begin(), cur.end(), 0);
    while (true) {
        out.push_back(cur);
        int i = l - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - l + i) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < l; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

std::size_t subset_rank(const std::vector<int>& subset, int n) {
    // Count subsets that precede `subset` lexicographically.
    const int l = static_cast<int>(subset.size());
    std::size_t rank = 0;
    int prev = -1;
    for (int i = 0; i < l; ++i) {
        for (int v = prev + 1; v < subset[static_cast<std::size_t>(i)]; ++v)
            rank += static_cast<std::size_t>(binomial(n - 1 - v, l - 1 - i).convert_to<long long>());
        prev = subset[static_cast<std::size_t>(i)];
    }
    return rank;
}

}  // namespace detloci::exact
