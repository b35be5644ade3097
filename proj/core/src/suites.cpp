#include "detloci/suite/suites.hpp"

#include "detloci/angles/angles.hpp"
#include "detloci/chern/chern.hpp"
#include "detloci/grassmann/grassmann.hpp"
#include "detloci/suite/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace detloci::suite {

namespace {

using namespace angles;
using gen::Rng;

TrialOutcome slack(double margin, std::vector<Observation> values = {}) {
    TrialOutcome o;
    o.passed = margin >= 0.0;
    o.margin = margin;
    o.values = std::move(values);
    return o;
}

TrialOutcome verdict(bool ok, std::vector<Observation> values = {}) {
    TrialOutcome o;
    o.passed = ok;
    if (!ok) o.margin = -1.0;
    o.values = std::move(values);
    return o;
}

TrialOutcome skip() {
    TrialOutcome o;
    o.skipped = true;
    return o;
}

double rad(Angle a) { return a.radians(); }

// A transversal-by-dimension pair: dims in [1, n-1] with p + q >= n + extra.
std::pair<int, int> spanning_dims(Rng& rng, int n, int extra = 0) {
    const int p = gen::uniform_int(rng, 1 + extra, n - 1);
    const int q = gen::uniform_int(rng, n - p + extra, n - 1);
    return {p, q};
}

// ---- angles --------------------------------------------------------------

TrialOutcome triangle(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const Vector u = gen::gaussian_vector(rng, n);
    const Vector v = gen::gaussian_vector(rng, n);
    const Vector w = gen::gaussian_vector(rng, n);
    const double uv = rad(angle_between(u, v)), vw = rad(angle_between(v, w)), uw = rad(angle_between(u, w));
    return slack(uv + vw + tol - uw, {{"n", double(n)}, {"angle_uw", uw}, {"angle_uv_plus_vw", uv + vw}});
}

TrialOutcome sub_add(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 1, 8);
    const Subspace u = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Subspace v = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Subspace w = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const double uv = rad(max_angle(u, v)), vw = rad(max_angle(v, w)), uw = rad(max_angle(u, w));
    return slack(uv + vw + tol - uw, {{"n", double(n)}, {"max_angle_uw", uw}, {"max_angle_uv_plus_vw", uv + vw}});
}

TrialOutcome symmetry(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const int d = gen::uniform_int(rng, 1, n - 1);
    const Subspace u = gen::random_subspace(rng, n, d);
    const Subspace v = gen::random_subspace(rng, n, d);
    const double diff = std::abs(rad(max_angle(u, v)) - rad(max_angle(v, u)));
    return slack(tol - diff, {{"n", double(n)}, {"dim", double(d)}, {"asymmetry", diff}});
}

TrialOutcome angle_perp(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const auto [p, q] = spanning_dims(rng, n);
    const Subspace u = gen::random_subspace(rng, n, p);
    const Subspace v = gen::random_subspace(rng, n, q);
    if (!is_transversal(u, v)) return skip();
    const double direct = rad(min_angle(u, v));
    const double dual = rad(min_angle_dual(u, v));
    return slack(tol - std::abs(direct - dual),
                 {{"n", double(n)}, {"min_angle", direct}, {"route_gap", std::abs(direct - dual)}});
}

TrialOutcome vari_min(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const Subspace u = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Subspace v = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Subspace w = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const double uw = rad(max_angle(u, w)), wv = rad(min_angle(w, v)), uv = rad(min_angle(u, v));
    return slack(uw + wv + tol - uv, {{"n", double(n)}, {"min_angle_uv", uv}, {"bound", uw + wv}});
}

TrialOutcome vari_min_cor(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const auto [p, q] = spanning_dims(rng, n);
    const Subspace u = gen::random_subspace(rng, n, p);
    const Subspace v = gen::random_subspace(rng, n, q);
    const Subspace u2 = gen::perturb(rng, u, gen::uniform_real(rng, 0.0, 0.3));
    const double eps = rad(min_angle(u, v));
    const double delta = rad(max_angle(u, u2));
    return slack(rad(min_angle(u2, v)) - (eps - delta) + tol, {{"min_angle", eps}, {"delta", delta}});
}

TrialOutcome bridge(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 8);
    const int q = gen::uniform_int(rng, 1, n - 1);
    const int p = gen::uniform_int(rng, n - q, n);
    const Subspace u = gen::random_subspace(rng, n, p);
    const Subspace v = gen::random_subspace(rng, n, q);
    const BridgeBound b = bridge_angle_bound(u, v);
    if (!std::isfinite(b.theta_norm)) return skip();
    const double margin = rad(b.observed) - b.angle_lower_bound + tol;
    TrialOutcome o = slack(margin, {{"theta_norm", b.theta_norm}});
    o.passed = margin > 0.0;
    return o;
}

constexpr double kGeometricEps = 0.3;
constexpr double kGeometricGamma = 0.01;

TrialOutcome geometric(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 3, 7);
    const auto [p, q] = spanning_dims(rng, n, 1);
    Subspace u, v;
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        u = gen::random_subspace(rng, n, p);
        v = gen::random_subspace(rng, n, q);
        found = rad(min_angle(u, v)) > kGeometricEps;
    }
    if (!found) return skip();
    const Subspace w = intersect(u, v);
    const Subspace u2 = gen::perturb(rng, u, kGeometricGamma * gen::uniform_real(rng, 0.0, 1.0));
    const Subspace v2 = gen::perturb(rng, v, kGeometricGamma * gen::uniform_real(rng, 0.0, 1.0));
    const bool transversal = is_transversal(u2, v2);
    const Subspace w2 = intersect(u2, v2);
    if (!transversal || w2.dim() != w.dim() || w.is_zero()) return verdict(false, {{"transversal", transversal ? 1.0 : 0.0}});
    const double ratio = rad(max_angle(w, w2)) / kGeometricGamma;
    TrialOutcome o = slack(rad(min_angle(u2, v2)), {{"ratio", ratio}});
    o.passed = transversal && std::isfinite(ratio);
    return o;
}

TrialOutcome orthogonal_invariance(Rng& rng, double tol) {
    const int n = gen::uniform_int(rng, 2, 7);
    const Subspace u = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Subspace v = gen::random_subspace(rng, n, gen::uniform_int(rng, 1, n));
    const Vector x = gen::gaussian_vector(rng, n);
    const Vector y = gen::gaussian_vector(rng, n);
    const Matrix qm = gen::random_orthogonal(rng, n);
    const Subspace qu = u.transformed(qm);
    const Subspace qv = v.transformed(qm);
    const std::array<double, 5> before{rad(angle_between(x, y)), rad(angle_to_subspace(x, v)), rad(max_angle(u, v)),
                                       rad(min_angle(u, v)), rad(first_principal_angle(u, v))};
    const std::array<double, 5> after{rad(angle_between(qm * x, qm * y)), rad(angle_to_subspace(qm * x, qv)),
                                      rad(max_angle(qu, qv)), rad(min_angle(qu, qv)),
                                      rad(first_principal_angle(qu, qv))};
    double worst = 0.0;
    for (std::size_t i = 0; i < before.size(); ++i) worst = std::max(worst, std::abs(before[i] - after[i]));
    return slack(tol - worst, {{"n", double(n)}, {"deviation", worst}});
}

// ---- grassmann -----------------------------------------------------------

using exact::ExactMatrix;

bool all_zero(const std::vector<exact::ExactComplex>& v) {
    return std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_zero(); });
}

bool is_zero_matrix(const ExactMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

grassmann::CMatrix to_double(const ExactMatrix& m) {
    grassmann::CMatrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out(i, j) = {m(i, j).re.convert_to<double>(), m(i, j).im.convert_to<double>()};
    return out;
}

TrialOutcome pluecker_relations(Rng& rng, double) {
    const int cols = gen::uniform_int(rng, 4, 5);
    const ExactMatrix m = gen::integer_matrix(rng, 2, cols, 5);
    return verdict(all_zero(grassmann::pluecker_relations(grassmann::pluecker_embed(m))));
}

TrialOutcome gl_invariance(Rng& rng, double) {
    const int r = gen::uniform_int(rng, 1, 3);
    const int cols = gen::uniform_int(rng, r, 5);
    const ExactMatrix p = gen::integer_matrix(rng, r, cols, 4);
    ExactMatrix g = gen::integer_matrix(rng, r, r, 3);
    auto det = exact::determinant(g);
    while (det.is_zero()) {
        g = gen::integer_matrix(rng, r, r, 3);
        det = exact::determinant(g);
    }
    const auto lhs = grassmann::pluecker_embed(g * p).coords;
    auto rhs = grassmann::pluecker_embed(p).coords;
    for (auto& c : rhs) c = det * c;
    return verdict(lhs == rhs);
}

TrialOutcome fs_metric(Rng& rng, double tol) {
    const grassmann::GrassmannPoint a(gen::gaussian_cmatrix(rng, 2, 4));
    const grassmann::GrassmannPoint b(gen::gaussian_cmatrix(rng, 2, 4));
    const grassmann::GrassmannPoint c(gen::gaussian_cmatrix(rng, 2, 4));
    const double ab = grassmann::fs_distance(a, b);
    const double ba = grassmann::fs_distance(b, a);
    const double bc = grassmann::fs_distance(b, c);
    const double ac = grassmann::fs_distance(a, c);
    TrialOutcome o = slack(ab + bc + tol - ac, {{"distance", ab}});
    o.passed = o.passed && ab == ba && grassmann::fs_distance(a, a) <= tol;
    return o;
}

TrialOutcome cauchy_binet(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 1, 5);
    const int k = gen::uniform_int(rng, 1, 5);
    const int m = gen::uniform_int(rng, 1, 5);
    const ExactMatrix a = gen::integer_matrix(rng, n, k, 3);
    const ExactMatrix b = gen::integer_matrix(rng, k, m, 3);
    const ExactMatrix ab = a * b;
    for (int l = 1; l <= std::min({n, k, m}); ++l)
        if (!(grassmann::compound_matrix(ab, l) ==
              grassmann::compound_matrix(a, l) * grassmann::compound_matrix(b, l)))
            return verdict(false, {{"order", static_cast<double>(l)}});
    return verdict(true);
}

TrialOutcome compound_rank(Rng& rng, double) {
    const int rows = gen::uniform_int(rng, 1, 5);
    const int cols = gen::uniform_int(rng, 1, 5);
    const int k = gen::uniform_int(rng, 0, std::min(rows, cols));
    const ExactMatrix m = gen::low_rank_integer_matrix(rng, rows, cols, k, 3);
    const int rank = grassmann::exact_rank(m);
    const int numeric = grassmann::rank_stratum({to_double(m)}, 1e-9);
    bool ok = rank == numeric && rank <= k;
    for (int l = 1; l <= std::min(rows, cols); ++l)
        ok = ok && ((rank >= l) == !is_zero_matrix(grassmann::compound_matrix(m, l)));
    return verdict(ok, {{"rank", static_cast<double>(rank)}});
}

constexpr std::array<std::pair<int, int>, 4> kRankVarietyShapes{{{2, 1}, {3, 2}, {4, 2}, {4, 3}}};

grassmann::MorphismSample full_rank_morphism(Rng& rng, int m, int n) {
    return {gen::gaussian_cmatrix(rng, n, m)};
}

TrialOutcome rank_variety_check(Rng& rng, bool stated) {
    const auto [m, n] = kRankVarietyShapes[static_cast<std::size_t>(gen::uniform_int(rng, 0, 3))];
    const int rank = grassmann::rank_variety_tangent_rank(full_rank_morphism(rng, m, n));
    const int expected =
        stated ? grassmann::rank_variety_stated_dimension(m, n) : grassmann::rank_variety_cone_dimension(m, n);
    return verdict(rank == expected, {{"m", static_cast<double>(m)},
                                      {"n", static_cast<double>(n)},
                                      {"tangent_rank", static_cast<double>(rank)},
                                      {"expected", static_cast<double>(expected)}});
}

TrialOutcome curvature(Rng& rng, double tol) {
    const int cols = gen::uniform_int(rng, 4, 5);
    const grassmann::CurvatureSample s = grassmann::curvature_at_base(gen::gaussian_cmatrix(rng, 2, cols - 2));
    const double top = s.eigenvalues.back();
    TrialOutcome o = slack(std::min(-top + 1e-10, -s.top_exterior),
                           {{"max_eigenvalue", top}, {"top_exterior", s.top_exterior},
                            {"max_imaginary_part", s.max_imaginary_part}});
    o.passed = top <= 1e-10 && s.top_exterior < 0.0 && s.max_imaginary_part <= tol;
    return o;
}

constexpr std::array<std::pair<int, int>, 3> kIsometryShapes{{{1, 2}, {2, 4}, {2, 5}}};

TrialOutcome chart_isometry(Rng& rng, double) {
    const auto [r, n] = kIsometryShapes[static_cast<std::size_t>(gen::uniform_int(rng, 0, 2))];
    const double defect = grassmann::chart_isometry_defect(r, n);
    return slack(1e-6 - defect, {{"defect", defect}});
}

// ---- chern ---------------------------------------------------------------

using namespace chern;

TrialOutcome truncation(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 1, 8);
    const int d1 = gen::uniform_int(rng, 1, n);
    const int d2 = gen::uniform_int(rng, n - d1 + 1, n);
    const CohomologyClass a = gen::random_homogeneous(rng, n, d1);
    const CohomologyClass b = gen::random_homogeneous(rng, n, d2);
    return verdict((a * b).is_zero() && (b * a).is_zero());
}

TrialOutcome porteous_degree(Rng& rng, double) {
    constexpr int n = 24;
    int r_e = 0, r_f = 0, r = 0;
    do {
        r_e = gen::uniform_int(rng, 1, 4);
        r_f = gen::uniform_int(rng, 1, 4);
        r = gen::uniform_int(rng, 0, std::min(r_e, r_f) - 1);
    } while (r_e - r > 3);
    const BundleSpec e = gen::random_bundle(rng, n, gen::uniform_int(rng, 1, 4));
    const BundleSpec f = gen::random_bundle(rng, n, gen::uniform_int(rng, 1, 4));
    const CohomologyClass c = difference_chern(f, e);
    std::vector<int> indices(static_cast<std::size_t>(gen::uniform_int(rng, 0, 3)));
    for (auto& i : indices) i = gen::uniform_int(rng, 0, 3);
    std::sort(indices.rbegin(), indices.rend());
    int sum = 0;
    for (int i : indices) sum += i;
    const CohomologyClass delta = porteous_delta(c, r_e, r_f, r, indices);
    const int expected = (r_e - r) * (r_f - r) + sum;
    const auto degree = delta.homogeneous_degree();
    return verdict(delta.is_zero() || (degree && *degree == expected),
                   {{"nonzero", delta.is_zero() ? 0.0 : 1.0}, {"degree", static_cast<double>(expected)}});
}

TrialOutcome cp_leading(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 1, 8);
    const int p = gen::uniform_int(rng, 1, n);
    const int r_e = gen::uniform_int(rng, 1, 6);
    const int r_f = gen::uniform_int(rng, 1, 6);
    const DeterminantalProblem prob = DeterminantalProblem::trivial(n, r_e, r_f, 0);
    const KPolynomial cp = prob.difference_class()[p];
    Rational expected(0);
    for (int i = 0; i <= p; ++i) expected += exact::binomial(r_f, i) * exact::binomial(r_e + p - i - 1, p - i);
    return verdict(cp.degree() == p && cp.leading_coefficient() == expected);
}

TrialOutcome whitney(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 1, 8);
    const BundleSpec e = gen::random_bundle(rng, n, gen::uniform_int(rng, 1, 5));
    const BundleSpec f = gen::random_bundle(rng, n, gen::uniform_int(rng, 1, 5));
    return verdict(difference_chern(f, e) * e.total == f.total);
}

TrialOutcome duality(Rng& rng, double) {
    const int n = gen::uniform_int(rng, 1, 8);
    const BundleSpec b = gen::random_bundle(rng, n, gen::uniform_int(rng, 1, 6));
    return verdict(dual_chern(dual_chern(b)) == b);
}

std::vector<Suite> build() {
    std::vector<Suite> s;
    auto add = [&](std::string name, std::string module, std::string description, TrialFn fn,
                   std::size_t trials = kDefaultTrials) {
        s.push_back({std::move(name), std::move(module), std::move(description), std::move(fn), trials});
    };
    add("triangle", "angles", "angle(u,w) <= angle(u,v) + angle(v,w)", triangle);
    add("sub_add", "angles", "max_angle(U,W) <= max_angle(U,V) + max_angle(V,W)", sub_add);
    add("symmetry", "angles", "max_angle symmetric for equal dimensions", symmetry);
    add("angle_perp", "angles", "direct and complement routes of min_angle agree", angle_perp);
    add("vari_min", "angles", "min_angle(U,V) <= max_angle(U,W) + min_angle(W,V)", vari_min);
    add("vari_min_cor", "angles", "min_angle(U',V) >= min_angle(U,V) - max_angle(U,U')", vari_min_cor);
    add("bridge", "angles", "observed min_angle exceeds 1/|theta|", bridge);
    add("geometric", "angles",
        "perturbations below gamma = 0.01 of pairs with min_angle > 0.3 stay transversal; reports max angle(W,W')/gamma",
        geometric);
    add("orthogonal_invariance", "angles", "angle operations commute with a common orthogonal map",
        orthogonal_invariance);

    add("pluecker_relations", "grassmann", "quadratic relations vanish on Gr(2,4), Gr(2,5)", pluecker_relations,
        1000);
    add("gl_invariance", "grassmann", "pluecker(G P) = det(G) pluecker(P)", gl_invariance, 1000);
    add("fs_metric", "grassmann", "fs_distance symmetric and satisfies the triangle inequality", fs_metric, 1000);
    add("cauchy_binet", "grassmann", "compound(AB) = compound(A) compound(B)", cauchy_binet, 1000);
    add("compound_rank", "grassmann", "rank >= l iff the l-th compound is nonzero", compound_rank, 1000);
    add("rank_variety", "grassmann", "tangent rank of phi -> wedge^n phi equals m - n + 1",
        [](Rng& rng, double) { return rank_variety_check(rng, true); }, 100);
    add("rank_variety_cone", "grassmann", "tangent rank of phi -> wedge^n phi equals n(m - n) + 1",
        [](Rng& rng, double) { return rank_variety_check(rng, false); }, 100);
    add("curvature", "grassmann", "-i R_U(u,Ju) negative semidefinite with negative trace", curvature, 1000);
    add("chart_isometry", "grassmann", "standard chart is isometric at Pi_0 to 1e-6", chart_isometry, 3);

    add("truncation", "chern", "products past degree n vanish", truncation, 1000);
    add("porteous_degree", "chern", "Delta is homogeneous of degree (r_e-r)(r_f-r) + sum(i)", porteous_degree,
        1000);
    add("cp_leading", "chern", "leading k^p coefficient of c_p of the difference class", cp_leading, 1000);
    add("whitney", "chern", "c(F - E) c(E) = c(F)", whitney, 1000);
    add("duality", "chern", "dual of dual is the identity", duality, 1000);
    return s;
}

}  // namespace

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = build();
    return suites;
}

std::vector<Suite> module_suites(std::string_view module) {
    std::vector<Suite> out;
    for (const auto& s : all_suites())
        if (s.module == module) out.push_back(s);
    return out;
}

const Suite* find_suite(std::string_view name) {
    for (const auto& s : all_suites())
        if (s.name == name) return &s;
    return nullptr;
}

}  // namespace detloci::suite
