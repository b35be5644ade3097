#include "detloci/chern/chern.hpp"

#include "detloci/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace detloci::chern {

using exact::binomial;

// ---------------------------------------------------------------------------
// CohomologyClass

CohomologyClass::CohomologyClass(int n) : n_(n), coeffs_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw DomainError("CohomologyClass: negative dimension");
}

CohomologyClass CohomologyClass::one(int n) {
    CohomologyClass c(n);
    c.coeffs_[0] = KPolynomial(1);
    return c;
}

CohomologyClass CohomologyClass::h(int n) { return monomial(n, 1, KPolynomial(1)); }

CohomologyClass CohomologyClass::omega_k(int n) { return monomial(n, 1, KPolynomial::k()); }

CohomologyClass CohomologyClass::monomial(int n, int degree, KPolynomial coefficient) {
    CohomologyClass c(n);
    if (degree < 0) throw DomainError("CohomologyClass::monomial: negative degree");
    if (degree <= n) c.coeffs_[static_cast<std::size_t>(degree)] = std::move(coefficient);
    return c;
}

CohomologyClass CohomologyClass::total_from_numbers(int n, std::span<const Rational> c1_upwards) {
    CohomologyClass c = one(n);
    for (std::size_t i = 0; i < c1_upwards.size(); ++i) {
        const int degree = static_cast<int>(i) + 1;
        if (degree > n) {
            if (c1_upwards[i] != 0)
                throw DomainError("Chern class c_" + std::to_string(degree) + " exceeds the base dimension " +
                                  std::to_string(n));
            continue;
        }
        c.coeffs_[i + 1] = KPolynomial(c1_upwards[i]);
    }
    return c;
}

const KPolynomial& CohomologyClass::operator[](int degree) const {
    static const KPolynomial zero;
    if (degree < 0 || degree > n_) return zero;
    return coeffs_[static_cast<std::size_t>(degree)];
}

KPolynomial CohomologyClass::coefficient(int degree) const { return (*this)[degree]; }

void CohomologyClass::set(int degree, KPolynomial value) {
    if (degree < 0) throw DomainError("CohomologyClass::set: negative degree");
    if (degree > n_) return;
    coeffs_[static_cast<std::size_t>(degree)] = std::move(value);
}

CohomologyClass CohomologyClass::part(int degree) const { return monomial(n_, std::max(degree, 0), degree < 0 ? KPolynomial() : (*this)[degree]); }

int CohomologyClass::max_degree() const {
    for (int d = n_; d >= 0; --d)
        if (!coeffs_[static_cast<std::size_t>(d)].is_zero()) return d;
    return -1;
}

std::optional<int> CohomologyClass::homogeneous_degree() const {
    std::optional<int> found;
    for (int d = 0; d <= n_; ++d) {
        if (coeffs_[static_cast<std::size_t>(d)].is_zero()) continue;
        if (found) return std::nullopt;
        found = d;
    }
    return found;
}

void CohomologyClass::check_compatible(const CohomologyClass& o) const {
    if (n_ != o.n_)
        throw DomainError("CohomologyClass: mixing dimensions " + std::to_string(n_) + " and " + std::to_string(o.n_));
}

CohomologyClass& CohomologyClass::operator+=(const CohomologyClass& o) {
    check_compatible(o);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] += o.coeffs_[d];
    return *this;
}

CohomologyClass& CohomologyClass::operator-=(const CohomologyClass& o) {
    check_compatible(o);
    for (std::size_t d = 0; d < coeffs_.size(); ++d) coeffs_[d] -= o.coeffs_[d];
    return *this;
}

CohomologyClass& CohomologyClass::operator*=(const CohomologyClass& o) {
    check_compatible(o);
    std::vector<KPolynomial> out(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < coeffs_.size(); ++j) {
            if (o.coeffs_[j].is_zero()) continue;
            out[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

CohomologyClass& CohomologyClass::operator*=(const KPolynomial& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
}

CohomologyClass CohomologyClass::pow(int e) const {
    if (e < 0) throw DomainError("CohomologyClass::pow: negative exponent");
    CohomologyClass out = one(n_);
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

CohomologyClass CohomologyClass::inverse() const {
    if (!(coeffs_[0] == KPolynomial(1)))
        throw DomainError("CohomologyClass::inverse: degree-0 part must be 1");
    CohomologyClass b = one(n_);
    for (int d = 1; d <= n_; ++d) {
        KPolynomial acc;
        for (int j = 1; j <= d; ++j) acc -= (*this)[j] * b[d - j];
        b.coeffs_[static_cast<std::size_t>(d)] = std::move(acc);
    }
    return b;
}

std::string CohomologyClass::to_string() const {
    std::string out;
    for (int d = 0; d <= n_; ++d) {
        const auto& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + c.to_string() + ")";
        if (d > 0) out += d == 1 ? "*h" : "*h^" + std::to_string(d);
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------
// Bundles

BundleSpec BundleSpec::trivial(int rank, int n) {
    if (rank < 0) throw DomainError("BundleSpec: negative rank");
    return {rank, CohomologyClass::one(n)};
}

BundleSpec BundleSpec::make(int rank, CohomologyClass total) {
    if (rank < 0) throw DomainError("BundleSpec: negative rank");
    if (!(total[0] == KPolynomial(1))) throw DomainError("BundleSpec: total Chern class must start with 1");
    for (int p = rank + 1; p <= total.top_degree(); ++p)
        if (!total[p].is_zero())
            throw DomainError("BundleSpec: c_" + std::to_string(p) + " nonzero above the rank " + std::to_string(rank));
    return {rank, std::move(total)};
}

BundleSpec twist_chern(const BundleSpec& b, const CohomologyClass& line_c1) {
    const int n = b.base_dim();
    if (line_c1.top_degree() != n) throw DomainError("twist_chern: line class over a different base");
    const auto deg = line_c1.homogeneous_degree();
    if (!line_c1.is_zero() && deg != 1) throw DomainError("twist_chern: line class must be homogeneous of degree 1");
    CohomologyClass out(n);
    for (int p = 0; p <= std::min(b.rank, n); ++p) {
        CohomologyClass cp(n);
        for (int i = 0; i <= p; ++i) {
            const Rational coeff = binomial(b.rank - i, p - i);
            if (coeff == 0) continue;
            cp += b.c(i) * line_c1.pow(p - i) * KPolynomial(coeff);
        }
        out += cp;
    }
    return {b.rank, std::move(out)};
}

BundleSpec dual_chern(const BundleSpec& b) {
    CohomologyClass out = b.total;
    for (int p = 1; p <= out.top_degree(); p += 2) out.set(p, -out[p]);
    return {b.rank, std::move(out)};
}

CohomologyClass difference_chern(const BundleSpec& f, const BundleSpec& e) {
    if (f.base_dim() != e.base_dim()) throw DomainError("difference_chern: bundles over different bases");
    return f.total * e.total.inverse();
}

CohomologyClass porteous_delta(const CohomologyClass& c, int r_e, int r_f, int r, std::span<const int> indices) {
    const int size = r_e - r;
    if (size < 1) throw DomainError("porteous_delta: r_e - r must be at least 1");
    if (r_f - r < 0) throw DomainError("porteous_delta: r exceeds r_f");
    std::vector<int> idx;
    for (std::size_t i = 0; i < indices.size(); ++i) {
        if (indices[i] < 0) throw DomainError("porteous_delta: negative index");
        if (i > 0 && indices[i] > indices[i - 1]) throw DomainError("porteous_delta: indices must be nonincreasing");
        if (indices[i] > 0) idx.push_back(indices[i]);
    }
    const int n = c.top_degree();
    if (static_cast<int>(idx.size()) > size) return CohomologyClass::zero(n);
    idx.resize(static_cast<std::size_t>(size), 0);

    auto entry = [&](int a, int b) -> CohomologyClass {
        const int j = r_f - r + idx[static_cast<std::size_t>(a)] + b - a;
        if (j < 0) return CohomologyClass::zero(n);
        if (j == 0) return CohomologyClass::one(n);
        return c.part(j);
    };

    // Leibniz expansion; the matrices here are at most a few rows.
    std::vector<int> perm(static_cast<std::size_t>(size));
    std::iota(perm.begin(), perm.end(), 0);
    CohomologyClass det = CohomologyClass::zero(n);
    do {
        int inversions = 0;
        for (int a = 0; a < size; ++a)
            for (int b = a + 1; b < size; ++b)
                if (perm[static_cast<std::size_t>(a)] > perm[static_cast<std::size_t>(b)]) ++inversions;
        CohomologyClass term = CohomologyClass::one(n);
        for (int a = 0; a < size && !term.is_zero(); ++a) term *= entry(a, perm[static_cast<std::size_t>(a)]);
        if (inversions % 2 == 0)
            det += term;
        else
            det -= term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

InverseKSeries integrate(const CohomologyClass& cls) {
    const int n = cls.top_degree();
    const KPolynomial& top = cls[n];
    if (top.degree() > n)
        throw DomainError("integrate: k-degree " + std::to_string(top.degree()) + " exceeds n = " + std::to_string(n));
    std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int j = 0; j <= n; ++j) out[static_cast<std::size_t>(j)] = top.coefficient(n - j);
    return InverseKSeries(std::move(out));
}

// ---------------------------------------------------------------------------
// Invariants

Invariant Invariant::from_top_class(const CohomologyClass& cls) {
    Invariant inv;
    inv.raw = cls[cls.top_degree()];
    inv.per_volume = integrate(cls);
    inv.leading_coefficient = inv.raw.leading_coefficient();
    inv.leading_power = inv.raw.degree();
    return inv;
}

void InvariantReport::fill_quotients() {
    quotients.clear();
    auto add = [&](const char* name, const std::optional<Invariant>& num, const std::optional<Invariant>& den) {
        if (!num || !den) return;
        const Rational d = den->per_volume_leading();
        if (d == 0) return;
        quotients.emplace(name, num->per_volume_leading() / d);
    };
    add("n1/vol", n1, vol);
    add("n11/vol", n11, vol);
    add("n2/vol", n2, vol);
    add("n2/n11", n2, n11);
}

DeterminantalProblem DeterminantalProblem::trivial(int n, int r_e, int r_f, int r) {
    return {n, BundleSpec::trivial(n, n), BundleSpec::trivial(r_e, n), BundleSpec::trivial(r_f, n), r};
}

void DeterminantalProblem::validate() const {
    if (n < 1) throw DomainError("DeterminantalProblem: n must be positive");
    if (tangent.rank != n) throw DomainError("DeterminantalProblem: tangent bundle must have rank n");
    for (const BundleSpec* b : {&tangent, &e, &f})
        if (b->base_dim() != n) throw DomainError("DeterminantalProblem: Chern data over a base of the wrong dimension");
    if (e.rank < 1 || f.rank < 1) throw DomainError("DeterminantalProblem: ranks must be positive");
    if (r < 0 || r >= std::min(e.rank, f.rank))
        throw DomainError("DeterminantalProblem: need 0 <= r < min(r_e, r_f), got r = " + std::to_string(r));
    if (codimension() > n)
        throw DomainError("DeterminantalProblem: expected codimension " + std::to_string(codimension()) +
                          " exceeds n = " + std::to_string(n));
}

BundleSpec DeterminantalProblem::twisted_e() const {
    return twist_chern(e, CohomologyClass::omega_k(n) * KPolynomial(-1));
}

BundleSpec DeterminantalProblem::twisted_f() const { return twist_chern(f, CohomologyClass::omega_k(n)); }

CohomologyClass DeterminantalProblem::difference_class() const { return difference_chern(twisted_f(), twisted_e()); }

namespace {

struct TwistedData {
    int s = 0;   // r_e - r
    int q = 0;   // r_f - r
    int d = 0;   // r_e - r_f
    CohomologyClass c1m, c2m;
    CohomologyClass c1e, c2e, c1f, c2f;
    CohomologyClass c1_diff;  // c1(E') - c1(F')
    CohomologyClass delta, delta1, delta2, delta11;
};

TwistedData prepare(const DeterminantalProblem& p) {
    p.validate();
    TwistedData t;
    t.s = p.e.rank - p.r;
    t.q = p.f.rank - p.r;
    t.d = p.e.rank - p.f.rank;
    const BundleSpec e = p.twisted_e();
    const BundleSpec f = p.twisted_f();
    t.c1m = p.tangent.c(1);
    t.c2m = p.tangent.c(2);
    t.c1e = e.c(1);
    t.c2e = e.c(2);
    t.c1f = f.c(1);
    t.c2f = f.c(2);
    t.c1_diff = t.c1e - t.c1f;
    const CohomologyClass c = difference_chern(f, e);
    const int r_e = p.e.rank;
    const int r_f = p.f.rank;
    const std::vector<int> none{};
    const std::vector<int> one{1};
    const std::vector<int> two{2};
    const std::vector<int> one_one{1, 1};
    t.delta = porteous_delta(c, r_e, r_f, p.r, none);
    t.delta1 = porteous_delta(c, r_e, r_f, p.r, one);
    t.delta2 = porteous_delta(c, r_e, r_f, p.r, two);
    t.delta11 = porteous_delta(c, r_e, r_f, p.r, one_one);
    return t;
}

KPolynomial rat(const Rational& v) { return KPolynomial(v); }

}  // namespace

Invariant determinantal_volume(const DeterminantalProblem& p) {
    p.validate();
    const CohomologyClass c = p.difference_class();
    const std::vector<int> none{};
    const CohomologyClass delta = porteous_delta(c, p.e.rank, p.f.rank, p.r, none);
    return Invariant::from_top_class(delta * CohomologyClass::omega_k(p.n).pow(p.locus_dimension()));
}

InvariantReport harris_tu_n1(const DeterminantalProblem& p) {
    p.validate();
    if (p.locus_dimension() != 1)
        throw DomainError("harris_tu_n1: needs n = (r_e - r)(r_f - r) + 1, got locus dimension " +
                          std::to_string(p.locus_dimension()));
    const TwistedData t = prepare(p);
    const CohomologyClass first = t.c1m + t.c1_diff * rat(t.s);
    const CohomologyClass n1 = first * t.delta + t.delta1 * rat(t.d);

    InvariantReport report;
    report.vol = Invariant::from_top_class(t.delta * CohomologyClass::omega_k(p.n));
    report.n1 = Invariant::from_top_class(n1);
    report.fill_quotients();
    return report;
}

InvariantReport harris_tu_n11_n2(const DeterminantalProblem& p) {
    p.validate();
    if (p.locus_dimension() != 2)
        throw DomainError("harris_tu_n11_n2: needs n = (r_e - r)(r_f - r) + 2, got locus dimension " +
                          std::to_string(p.locus_dimension()));
    const TwistedData t = prepare(p);
    const Rational s(t.s);
    const Rational d(t.d);
    const Rational q(t.q);

    const CohomologyClass a = t.c1m + t.c1_diff * rat(s);
    const CohomologyClass n11 =
        a * a * t.delta + a * t.delta1 * rat(2 * d) + (t.delta2 + t.delta11) * rat(d * d);

    const CohomologyClass bracket = t.c2m + t.c1m * t.c1_diff * rat(s) + (t.c2e - t.c2f) * rat(s) +
                                    t.c1e * t.c1e * rat(binomial(t.s, 2)) - t.c1e * t.c1f * rat(s * s) +
                                    t.c1f * t.c1f * rat(binomial(t.s + 1, 2));
    const CohomologyClass n2 = bracket * t.delta + (t.c1m * rat(s) + t.c1_diff * rat(s * d - 1)) * t.delta1 +
                               t.delta2 * rat((d * d + s + q - 2) / 2) + t.delta11 * rat((d * d - s - q - 2) / 2);

    InvariantReport report;
    report.vol = Invariant::from_top_class(t.delta * CohomologyClass::omega_k(p.n).pow(2));
    report.n11 = Invariant::from_top_class(n11);
    report.n2 = Invariant::from_top_class(n2);
    report.fill_quotients();
    return report;
}

InvariantReport zero_locus_invariants(int n, const BundleSpec& tangent, const BundleSpec& g) {
    if (g.rank >= n) throw DomainError("zero_locus_invariants: rank must be below n for a positive-dimensional locus");
    if (tangent.rank != n || tangent.base_dim() != n || g.base_dim() != n)
        throw DomainError("zero_locus_invariants: bundles do not live over a base of dimension n");
    const BundleSpec twisted = twist_chern(g, CohomologyClass::omega_k(n));
    const CohomologyClass top = twisted.c(g.rank);
    const CohomologyClass tz = difference_chern(tangent, twisted);
    const int dim = n - g.rank;

    InvariantReport report;
    report.vol = Invariant::from_top_class(top * CohomologyClass::omega_k(n).pow(dim));
    if (dim == 1) report.n1 = Invariant::from_top_class(tz.part(1) * top);
    if (dim == 2) {
        const CohomologyClass c1 = tz.part(1);
        report.n11 = Invariant::from_top_class(c1 * c1 * top);
        report.n2 = Invariant::from_top_class(tz.part(2) * top);
    }
    report.fill_quotients();
    return report;
}

namespace {

bool leading_match_ex1(const InvariantReport& det, const InvariantReport& zero) {
    // Same class: vol_D k1 = vol_Z k2; same n1: q_D vol_D k1 = q_Z vol_Z k2.
    // With vol_Z = 1 at leading order this reduces to q_D = q_Z vol_D.
    const Rational qd = det.quotients.at("n1/vol");
    const Rational qz = zero.quotients.at("n1/vol");
    const Rational vd = det.vol->per_volume_leading();
    const Rational vz = zero.vol->per_volume_leading();
    return qd * vz == qz * vd;
}

}  // namespace

bool cross_k_isotopy_check(int which, int n) {
    if (which != 1) throw DomainError("cross_k_isotopy_check: only Example 1 carries this criterion");
    if (n < 2) throw DomainError("cross_k_isotopy_check: need n >= 2");
    const InvariantReport det = harris_tu_n1(DeterminantalProblem::trivial(n, 2, n, 1));
    const InvariantReport zero = zero_locus_invariants(n, BundleSpec::trivial(n, n), BundleSpec::trivial(n - 1, n));
    return leading_match_ex1(det, zero);
}

std::vector<ExampleRow> example_tables(int which, int n_min, int n_max) {
    if (which != 1 && which != 2) throw DomainError("example_tables: which must be 1 or 2");
    const int lowest = which == 1 ? 2 : 3;
    if (n_min < lowest)
        throw DomainError("example_tables: Example " + std::to_string(which) + " needs n >= " + std::to_string(lowest));
    std::vector<ExampleRow> rows;
    for (int n = n_min; n <= n_max; ++n) {
        ExampleRow row;
        row.which = which;
        row.n = n;
        const BundleSpec tangent = BundleSpec::trivial(n, n);
        if (which == 1) {
            row.determinantal = harris_tu_n1(DeterminantalProblem::trivial(n, 2, n, 1));
            row.zero_locus = zero_locus_invariants(n, tangent, BundleSpec::trivial(n - 1, n));
            row.distinct = !leading_match_ex1(row.determinantal, row.zero_locus);
        } else {
            row.determinantal = harris_tu_n11_n2(DeterminantalProblem::trivial(n, 2, n - 1, 1));
            row.zero_locus = zero_locus_invariants(n, tangent, BundleSpec::trivial(n - 2, n));
            const auto& dq = row.determinantal.quotients;
            const auto& zq = row.zero_locus.quotients;
            row.distinct = dq.at("n11/vol") != zq.at("n11/vol") || dq.at("n2/vol") != zq.at("n2/vol");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detloci::chern
