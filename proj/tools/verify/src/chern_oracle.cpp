#include "detloci/verify/chern_oracle.hpp"

#include "detloci/suite/generators.hpp"

#include <algorithm>

namespace detloci::verify {

namespace {

using Poly = std::vector<Rational>;  // coefficients of h^0 .. h^n

Poly zero(int n) { return Poly(static_cast<std::size_t>(n) + 1, Rational(0)); }

Poly constant(int n, const Rational& c) {
    Poly p = zero(n);
    p[0] = c;
    return p;
}

Poly add(const Poly& a, const Poly& b) {
    Poly out = a;
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

Poly scale(const Poly& a, const Rational& s) {
    Poly out = a;
    for (auto& c : out) c *= s;
    return out;
}

Poly mul(const Poly& a, const Poly& b) {
    Poly out = zero(static_cast<int>(a.size()) - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < out.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

Poly degree_part(const Poly& a, int d) {
    Poly out = zero(static_cast<int>(a.size()) - 1);
    if (d >= 0 && d < static_cast<int>(a.size())) out[static_cast<std::size_t>(d)] = a[static_cast<std::size_t>(d)];
    return out;
}

// sum_i c_i h^i (1 + t h)^{rank - i}
Poly twisted_total(const chern::BundleSpec& b, const Rational& k, const Rational& t, int n) {
    Poly out = zero(n);
    for (int i = 0; i <= std::min(b.rank, n); ++i) {
        Poly term = zero(n);
        term[static_cast<std::size_t>(i)] = b.total[i].evaluate(k);
        Poly linear = constant(n, Rational(1));
        if (n >= 1) linear[1] = t;
        for (int e = 0; e < b.rank - i; ++e) term = mul(term, linear);
        out = add(out, term);
    }
    return out;
}

// q with q * e = f.
Poly divide(const Poly& f, const Poly& e) {
    Poly q = zero(static_cast<int>(f.size()) - 1);
    for (std::size_t d = 0; d < f.size(); ++d) {
        Rational acc = f[d];
        for (std::size_t j = 1; j <= d; ++j) acc -= e[j] * q[d - j];
        q[d] = acc / e[0];
    }
    return q;
}

Poly cofactor_det(const std::vector<std::vector<Poly>>& m, int n) {
    const std::size_t size = m.size();
    if (size == 0) return constant(n, Rational(1));
    if (size == 1) return m[0][0];
    Poly out = zero(n);
    for (std::size_t col = 0; col < size; ++col) {
        std::vector<std::vector<Poly>> minor;
        for (std::size_t row = 1; row < size; ++row) {
            std::vector<Poly> r;
            for (std::size_t c = 0; c < size; ++c)
                if (c != col) r.push_back(m[row][c]);
            minor.push_back(std::move(r));
        }
        const Poly term = mul(m[0][col], cofactor_det(minor, n));
        out = add(out, col % 2 == 0 ? term : scale(term, Rational(-1)));
    }
    return out;
}

Poly schur(const Poly& c, int s, int q, std::vector<int> parts, int n) {
    if (static_cast<int>(parts.size()) > s) return zero(n);
    parts.resize(static_cast<std::size_t>(s), 0);
    std::vector<std::vector<Poly>> m(static_cast<std::size_t>(s), std::vector<Poly>(static_cast<std::size_t>(s)));
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < s; ++b) {
            const int j = q + parts[static_cast<std::size_t>(a)] + b - a;
            m[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                j < 0 || j > n ? zero(n) : degree_part(c, j);
        }
    return cofactor_det(m, n);
}

Poly pow_h(int n, const Rational& k, int e) {
    Poly out = zero(n);
    if (e <= n) {
        Rational coeff(1);
        for (int i = 0; i < e; ++i) coeff *= k;
        out[static_cast<std::size_t>(e)] = coeff;
    }
    return out;
}

Rational binom2(const Rational& x) { return x * (x - 1) / 2; }

}  // namespace

NaiveValues naive_invariants(const chern::DeterminantalProblem& p, const Rational& k) {
    p.validate();
    const int n = p.n;
    const int r_e = p.e.rank;
    const int r_f = p.f.rank;
    const Rational s(r_e - p.r);
    const Rational q(r_f - p.r);
    const Rational d(r_e - r_f);

    const Poly e = twisted_total(p.e, k, -k, n);
    const Poly f = twisted_total(p.f, k, k, n);
    const Poly c = divide(f, e);
    const int si = r_e - p.r;
    const int qi = r_f - p.r;
    const Poly delta = schur(c, si, qi, {}, n);
    const Poly delta1 = schur(c, si, qi, {1}, n);
    const Poly delta2 = schur(c, si, qi, {2}, n);
    const Poly delta11 = schur(c, si, qi, {1, 1}, n);

    Poly tm = zero(n);
    for (int i = 0; i <= n; ++i) tm[static_cast<std::size_t>(i)] = p.tangent.total[i].evaluate(k);
    const Poly c1m = degree_part(tm, 1);
    const Poly c2m = degree_part(tm, 2);
    const Poly c1e = degree_part(e, 1), c2e = degree_part(e, 2);
    const Poly c1f = degree_part(f, 1), c2f = degree_part(f, 2);
    const Poly c1ef = add(c1e, scale(c1f, Rational(-1)));
    const Poly first = add(c1m, scale(c1ef, s));

    const int dim = n - si * qi;
    NaiveValues out;
    out.vol = mul(delta, pow_h(n, k, dim))[static_cast<std::size_t>(n)];
    if (dim == 1) {
        const Poly n1 = add(mul(first, delta), scale(delta1, d));
        out.n1 = n1[static_cast<std::size_t>(n)];
    }
    if (dim == 2) {
        Poly n11 = mul(mul(first, first), delta);
        n11 = add(n11, scale(mul(first, delta1), 2 * d));
        n11 = add(n11, scale(add(delta2, delta11), d * d));
        out.n11 = n11[static_cast<std::size_t>(n)];

        Poly bracket = c2m;
        bracket = add(bracket, scale(mul(c1m, c1ef), s));
        bracket = add(bracket, scale(add(c2e, scale(c2f, Rational(-1))), s));
        bracket = add(bracket, scale(mul(c1e, c1e), binom2(s)));
        bracket = add(bracket, scale(mul(c1e, c1f), -s * s));
        bracket = add(bracket, scale(mul(c1f, c1f), binom2(s + 1)));
        Poly n2 = mul(bracket, delta);
        n2 = add(n2, mul(add(scale(c1m, s), scale(c1ef, s * d - 1)), delta1));
        n2 = add(n2, scale(delta2, (d * d + s + q - 2) / 2));
        n2 = add(n2, scale(delta11, (d * d - s - q - 2) / 2));
        out.n2 = n2[static_cast<std::size_t>(n)];
    }
    return out;
}

std::string compare_with_naive(const chern::DeterminantalProblem& p) {
    const int dim = p.locus_dimension();
    chern::InvariantReport exact;
    if (dim == 1)
        exact = chern::harris_tu_n1(p);
    else if (dim == 2)
        exact = chern::harris_tu_n11_n2(p);
    else
        return "locus dimension " + std::to_string(dim) + " has no closed formula";
    for (int kk = 1; kk <= p.n + 2; ++kk) {
        const Rational k(kk);
        const NaiveValues naive = naive_invariants(p, k);
        auto check = [&](const char* name, const std::optional<chern::Invariant>& inv,
                         const std::optional<Rational>& value) -> std::string {
            if (!inv && !value) return {};
            if (!inv || !value) return std::string(name) + " present in only one engine";
            const Rational got = inv->raw.evaluate(k);
            if (got != *value)
                return std::string(name) + " at k = " + std::to_string(kk) + ": exact " + exact::to_string(got) +
                       ", naive " + exact::to_string(*value);
            return {};
        };
        for (const std::string& msg : {check("vol", exact.vol, naive.vol), check("n1", exact.n1, naive.n1),
                                       check("n11", exact.n11, naive.n11), check("n2", exact.n2, naive.n2)})
            if (!msg.empty()) return msg;
    }
    return {};
}

chern::DeterminantalProblem random_small_problem(std::mt19937_64& rng) {
    using suite::gen::uniform_int;
    for (;;) {
        const int r = uniform_int(rng, 0, 2);
        const int s = uniform_int(rng, 1, 3);
        const int q = uniform_int(rng, 1, 3);
        const int dim = uniform_int(rng, 1, 2);
        const int n = s * q + dim;
        if (n > 7) continue;
        chern::DeterminantalProblem p;
        p.n = n;
        p.r = r;
        p.tangent = suite::gen::random_bundle(rng, n, n);
        p.e = suite::gen::random_bundle(rng, n, r + s);
        p.f = suite::gen::random_bundle(rng, n, r + q);
        return p;
    }
}

}  // namespace detloci::verify
