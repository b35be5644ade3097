#pragma once

#include "detloci/chern/polynomial.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace detloci::chern {

/// Element of Q[k][h] / (h^{n+1}): sum_d a_d(k) h^d with h = omega / 2pi of
/// degree 2. Products past degree n vanish.
class CohomologyClass {
public:
    CohomologyClass() = default;
    explicit CohomologyClass(int n);

    static CohomologyClass zero(int n) { return CohomologyClass(n); }
    static CohomologyClass one(int n);
    /// The generator h = c_1(L).
    static CohomologyClass h(int n);
    /// omega_k = k h.
    static CohomologyClass omega_k(int n);
    /// A multiple of h^degree.
    static CohomologyClass monomial(int n, int degree, KPolynomial coefficient);
    /// 1 + c_1 h + c_2 h^2 + ... from numeric multiples (c_0 = 1 is implied).
    static CohomologyClass total_from_numbers(int n, std::span<const Rational> c1_upwards);

    [[nodiscard]] int top_degree() const { return n_; }
    [[nodiscard]] const KPolynomial& operator[](int degree) const;
    [[nodiscard]] KPolynomial coefficient(int degree) const;
    void set(int degree, KPolynomial value);

    /// Only the degree-d part.
    [[nodiscard]] CohomologyClass part(int degree) const;
    /// Highest degree with a nonzero coefficient, -1 for the zero class.
    [[nodiscard]] int max_degree() const;
    /// Degree when exactly one degree is nonzero.
    [[nodiscard]] std::optional<int> homogeneous_degree() const;
    [[nodiscard]] bool is_zero() const { return max_degree() < 0; }

    [[nodiscard]] CohomologyClass pow(int e) const;
    /// Multiplicative inverse of a class with unit degree-0 part, by the
    /// recurrence b_d = -sum_{j=1..d} a_j b_{d-j}.
    [[nodiscard]] CohomologyClass inverse() const;

    CohomologyClass& operator+=(const CohomologyClass& o);
    CohomologyClass& operator-=(const CohomologyClass& o);
    CohomologyClass& operator*=(const CohomologyClass& o);
    CohomologyClass& operator*=(const KPolynomial& s);

    friend CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b) { return a += b; }
    friend CohomologyClass operator-(CohomologyClass a, const CohomologyClass& b) { return a -= b; }
    friend CohomologyClass operator*(CohomologyClass a, const CohomologyClass& b) { return a *= b; }
    friend CohomologyClass operator*(CohomologyClass a, const KPolynomial& s) { return a *= s; }
    friend CohomologyClass operator*(const KPolynomial& s, CohomologyClass a) { return a *= s; }
    friend CohomologyClass operator-(const CohomologyClass& a) { return CohomologyClass(a.n_) - a; }
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b) {
        return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
    }

    [[nodiscard]] std::string to_string() const;

private:
    void check_compatible(const CohomologyClass& o) const;
    int n_ = 0;
    std::vector<KPolynomial> coeffs_{KPolynomial()};
};

/// A complex vector bundle, through its rank and total Chern class.
struct BundleSpec {
    int rank = 0;
    CohomologyClass total;

    static BundleSpec trivial(int rank, int n);
    /// Throws DomainError unless c_0 = 1 and c_p = 0 for p > rank.
    static BundleSpec make(int rank, CohomologyClass total);

    [[nodiscard]] CohomologyClass c(int p) const { return total.part(p); }
    [[nodiscard]] int base_dim() const { return total.top_degree(); }

    friend bool operator==(const BundleSpec& a, const BundleSpec& b) { return a.rank == b.rank && a.total == b.total; }
};

/// B (x) L with c_1(L) = line_c1:
///   c_p(B (x) L) = sum_{i=0..p} C(rank - i, p - i) c_i(B) t^{p-i}.
BundleSpec twist_chern(const BundleSpec& b, const CohomologyClass& line_c1);

/// B*: c_p(B*) = (-1)^p c_p(B).
BundleSpec dual_chern(const BundleSpec& b);

/// c(F - E) = c(F) / c(E), truncated at degree n.
CohomologyClass difference_chern(const BundleSpec& f, const BundleSpec& e);

/// Schur determinant with entry (a, b) = c_{r_f - r + i_a + b - a} (0-based),
/// c_j = 0 for j < 0 and c_0 = 1, of size r_e - r. `indices` is a
/// nonincreasing list of nonnegative integers, padded with zeros to the
/// matrix size; a list with more nonzero entries than the size gives 0.
CohomologyClass porteous_delta(const CohomologyClass& c, int r_e, int r_f, int r, std::span<const int> indices);

/// Degree-n coefficient over vol(M) = integral of omega_k^n = k^n.
InverseKSeries integrate(const CohomologyClass& cls);

/// Leading behavior of one invariant.
struct Invariant {
    KPolynomial raw;          ///< integral over M, in units of integral(h^n)
    InverseKSeries per_volume;  ///< raw / k^n
    Rational leading_coefficient{0};
    int leading_power = -1;

    static Invariant from_top_class(const CohomologyClass& cls);
    [[nodiscard]] Rational per_volume_leading() const { return per_volume.leading(); }
};

struct InvariantReport {
    std::optional<Invariant> vol;
    std::optional<Invariant> n1;
    std::optional<Invariant> n11;
    std::optional<Invariant> n2;
    /// Leading per-volume quotients, e.g. "n1/vol", "n2/n11".
    std::map<std::string, Rational> quotients;

    void fill_quotients();
};

/// Problem data: base dimension, tangent bundle, E, F and the target rank.
/// The morphism is E (x) (L*)^k -> F (x) L^k.
struct DeterminantalProblem {
    int n = 0;
    BundleSpec tangent;
    BundleSpec e;
    BundleSpec f;
    int r = 0;

    /// All bundles trivial.
    static DeterminantalProblem trivial(int n, int r_e, int r_f, int r);

    [[nodiscard]] int codimension() const { return (e.rank - r) * (f.rank - r); }
    [[nodiscard]] int locus_dimension() const { return n - codimension(); }
    /// Throws DomainError on inconsistent data.
    void validate() const;

    [[nodiscard]] BundleSpec twisted_e() const;
    [[nodiscard]] BundleSpec twisted_f() const;
    /// c(F (x) L^k - E (x) (L*)^k).
    [[nodiscard]] CohomologyClass difference_class() const;
};

/// vol(D_r) = Delta omega_k^{dim D_r} over vol(M).
Invariant determinantal_volume(const DeterminantalProblem& p);

/// dim D_r = 1: n1 = (c1(M) + (r_e - r) c1(E - F)) Delta + (r_e - r_f) Delta_1.
InvariantReport harris_tu_n1(const DeterminantalProblem& p);

/// dim D_r = 2: the n11 and n2 formulas.
InvariantReport harris_tu_n11_n2(const DeterminantalProblem& p);

/// Zero set Z of a transverse section of G (x) L^k: vol = c_top omega_k^{dim Z},
/// and c_1(TM - G'), c_1^2, c_2 against c_top(G') when dim Z is 1 or 2.
InvariantReport zero_locus_invariants(int n, const BundleSpec& tangent, const BundleSpec& g);

struct ExampleRow {
    int which = 0;
    int n = 0;
    InvariantReport determinantal;
    InvariantReport zero_locus;
    bool distinct = false;
};

/// Example 1 (r = 1, r_e = 2, r_f = n) against the zero locus of rank n - 1,
/// or Example 2 (r_f = n - 1) against rank n - 2; trivial input bundles.
std::vector<ExampleRow> example_tables(int which, int n_min, int n_max);

/// Whether a determinantal D_1 can match a zero locus Z at leading order for
/// different twists k1, k2: (1 - n) n 2^{n-1} = -2 - 2n + 4/n, decided from
/// the computed invariants.
bool cross_k_isotopy_check(int which, int n);

}  // namespace detloci::chern
