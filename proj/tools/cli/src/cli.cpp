#include "detloci/cli/cli.hpp"

#include "io.hpp"

#include "detloci/angles/angles.hpp"
#include "detloci/errors.hpp"
#include "detloci/suite/suites.hpp"
#include "detloci/verify/acceptance.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace detloci::cli {

namespace {

struct Globals {
    std::string seed = "0xDE7C0C1";
    std::optional<std::size_t> trials;
    double tol = suite::kDefaultTolerance;
    std::string out;
    std::string format;
    bool no_timestamp = false;
    unsigned jobs = 1;

    [[nodiscard]] std::uint64_t seed_value() const {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(seed, &used, 0);
            if (used != seed.size()) throw InputError("");
            return v;
        } catch (const std::exception&) {
            throw InputError("--seed must be an unsigned 64-bit integer (decimal or 0x hex), got " + seed);
        }
    }

    [[nodiscard]] std::string format_or(const std::string& fallback) const {
        const std::string f = format.empty() ? fallback : format;
        if (f != "json" && f != "csv" && f != "text") throw InputError("--format must be json or csv");
        return f;
    }
};

std::string fmt17(double x) {
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

// ---- suites ------------------------------------------------------------

struct SuiteArgs {
    std::string name;
    bool list = false;
    std::optional<std::size_t> inject;
};

json suite_json(const suite::SuiteReport& r, const suite::RunConfig& cfg, const Globals& g) {
    json j = to_json(r, !g.no_timestamp);
    j["seed"] = cfg.seed;
    j["tolerance"] = cfg.tolerance;
    return j;
}

std::string suite_csv_header() { return "suite,trials,failures,skipped,worst_margin\n"; }

std::string suite_csv_row(const suite::SuiteReport& r) {
    return r.suite + "," + std::to_string(r.trials) + "," + std::to_string(r.failures) + "," +
           std::to_string(r.skipped) + "," + fmt17(r.worst_margin) + "\n";
}

int run_suites(const std::string& module, const SuiteArgs& a, const Globals& g, std::string& text) {
    std::vector<suite::Suite> chosen;
    const auto available = suite::module_suites(module);
    if (a.list) {
        for (const auto& s : available) text += s.name + "\t" + s.description + "\n";
        return kExitOk;
    }
    if (a.name == "all") {
        chosen = available;
    } else {
        const auto it = std::find_if(available.begin(), available.end(), [&](const auto& s) { return s.name == a.name; });
        if (it == available.end()) throw InputError("unknown " + module + " suite \"" + a.name + "\" (try --list)");
        chosen.push_back(*it);
    }
    if (!(g.tol > 0.0)) throw InputError("--tol must be positive");
    if (g.trials && *g.trials == 0) throw InputError("--trials must be positive");

    const std::string format = g.format_or("json");
    json reports = json::array();
    std::string csv = suite_csv_header();
    bool failed = false;
    for (const auto& s : chosen) {
        suite::RunConfig cfg;
        cfg.seed = g.seed_value();
        cfg.trials = g.trials.value_or(s.default_trials);
        cfg.tolerance = g.tol;
        cfg.jobs = std::max(1u, g.jobs);
        cfg.inject_failure_at = a.inject;
        const auto r = suite::run_suite(s, cfg);
        failed = failed || !r.passed();
        reports.push_back(suite_json(r, cfg, g));
        csv += suite_csv_row(r);
    }
    if (format == "csv")
        text = csv;
    else
        text = (reports.size() == 1 ? reports[0] : json{{"reports", reports}}).dump(2) + "\n";
    return failed ? kExitFailure : kExitOk;
}

// ---- angles ------------------------------------------------------------

std::string angles_pair(const std::string& path) {
    const json in = read_json_file(path);
    const angles::Subspace u = subspace_from_json(require_field(in, "u"));
    const angles::Subspace v = subspace_from_json(require_field(in, "v"));
    if (u.ambient_dim() != v.ambient_dim()) throw InputError("u and v live in different ambient dimensions");
    if (u.is_zero() || v.is_zero()) throw InputError("u and v must be nonzero subspaces");
    json out;
    out["dim_u"] = u.dim();
    out["dim_v"] = v.dim();
    out["max_angle_uv"] = angles::max_angle(u, v).radians();
    out["max_angle_vu"] = angles::max_angle(v, u).radians();
    out["min_angle"] = angles::min_angle(u, v).radians();
    out["min_angle_dual"] = angles::min_angle_dual(u, v).radians();
    out["principal_angles"] = angles::principal_angles(u, v);
    out["transversal"] = angles::is_transversal(u, v);
    out["intersection_dim"] = angles::intersect(u, v).dim();
    if (!v.is_zero() && v.dim() < v.ambient_dim()) {
        const auto b = angles::bridge_angle_bound(u, v);
        out["bridge"] = {{"theta_norm", std::isfinite(b.theta_norm) ? json(b.theta_norm) : json(nullptr)},
                         {"angle_lower_bound", b.angle_lower_bound},
                         {"observed", b.observed.radians()}};
    }
    if (u.ambient_dim() % 2 == 0) {
        const angles::ComplexStructure j(u.ambient_dim());
        if (u.dim() % 2 == 0) out["complex_angle_u"] = angles::complex_angle(u, j).radians();
        if (v.dim() % 2 == 0) out["complex_angle_v"] = angles::complex_angle(v, j).radians();
    }
    return out.dump(2) + "\n";
}

// ---- grassmann ---------------------------------------------------------

json subsets_json(int r, int n) {
    json out = json::array();
    for (const auto& s : exact::increasing_subsets(n, r)) out.push_back(s);
    return out;
}

std::string grassmann_action(const std::string& action, const std::string& input, bool rational, int order,
                             int samples, const Globals& g) {
    const json in = read_json_file(input);
    json out;
    if (action == "pluecker") {
        if (rational) {
            const auto m = exact_matrix_from_json(in);
            if (m.rows() > m.cols()) throw InputError("need rows <= cols for a Pluecker embedding");
            const auto p = grassmann::pluecker_embed(m);
            json coords = json::array();
            for (const auto& c : p.coords) coords.push_back({exact::to_string(c.re), exact::to_string(c.im)});
            const auto rel = grassmann::pluecker_relations(p);
            out = {{"r", p.r}, {"n", p.n}, {"subsets", subsets_json(p.r, p.n)}, {"coords", coords},
                   {"relations", rel.size()},
                   {"relations_vanish", std::all_of(rel.begin(), rel.end(), [](const auto& x) { return x.is_zero(); })}};
        } else {
            const grassmann::GrassmannPoint pt(cmatrix_from_json(in));
            const auto p = grassmann::pluecker_embed(pt);
            json coords = json::array();
            for (const auto& c : p.coords) coords.push_back({c.real(), c.imag()});
            double worst = 0.0;
            for (const auto& x : grassmann::pluecker_relations(p)) worst = std::max(worst, std::abs(x));
            out = {{"r", p.r}, {"n", p.n}, {"subsets", subsets_json(p.r, p.n)}, {"coords", coords},
                   {"max_relation_residual", worst}};
        }
    } else if (action == "chart") {
        const grassmann::GrassmannPoint pt(cmatrix_from_json(in));
        out = {{"chart", to_json(grassmann::chart_psi0(pt))}};
    } else if (action == "distance") {
        const grassmann::GrassmannPoint p(cmatrix_from_json(require_field(in, "p")));
        const grassmann::GrassmannPoint q(cmatrix_from_json(require_field(in, "q")));
        out = {{"distance", grassmann::fs_distance(p, q)}};
    } else if (action == "curvature") {
        if (in.contains("tangent")) {
            const auto s = grassmann::curvature_at_base(cmatrix_from_json(in.at("tangent")));
            out = {{"eigenvalues", s.eigenvalues},
                   {"max_imaginary_part", s.max_imaginary_part},
                   {"top_exterior", s.top_exterior},
                   {"semidefinite_negative", s.eigenvalues.back() <= 1e-10},
                   {"top_exterior_negative", s.top_exterior < 0.0}};
        } else {
            const int r = in.value("r", 0);
            const int n = in.value("n", 0);
            const auto rep = grassmann::universal_curvature_at_base(r, n, samples, g.seed_value());
            out = {{"r", r},
                   {"n", n},
                   {"samples", rep.samples.size()},
                   {"max_eigenvalue", rep.max_eigenvalue()},
                   {"max_top_exterior", rep.max_top_exterior()},
                   {"semidefinite_negative", rep.max_eigenvalue() <= 1e-10},
                   {"top_exterior_negative", rep.max_top_exterior() < 0.0}};
        }
    } else if (action == "compound") {
        if (order < 1) throw InputError("compound needs --order l >= 1");
        if (rational)
            out = {{"order", order}, {"compound", to_json(grassmann::compound_matrix(exact_matrix_from_json(in), order))}};
        else
            out = {{"order", order}, {"compound", to_json(grassmann::compound_matrix(cmatrix_from_json(in), order))}};
    } else if (action == "rank") {
        const grassmann::MorphismSample phi{cmatrix_from_json(in)};
        const int m = phi.source_dim();
        const int n = phi.target_dim();
        const int rank = grassmann::rank_stratum(phi, 1e-9);
        out = {{"rank", rank}, {"codimension", grassmann::expected_stratum_codimension(m, n, rank)}};
        // The rank variety only makes sense for full-rank phi with m >= n.
        if (m >= n && rank == n) {
            out["tangent_rank"] = grassmann::rank_variety_tangent_rank(phi);
            out["stated_dimension"] = grassmann::rank_variety_stated_dimension(m, n);
            out["cone_dimension"] = grassmann::rank_variety_cone_dimension(m, n);
        }
    } else {
        throw InputError("unknown grassmann action " + action);
    }
    return out.dump(2) + "\n";
}

// ---- chern -------------------------------------------------------------

std::string lead_or_empty(const std::optional<chern::Invariant>& inv) {
    return inv ? exact::to_string(inv->per_volume_leading()) : "";
}

std::string quotient_or_empty(const chern::InvariantReport& r, const char* key) {
    const auto it = r.quotients.find(key);
    return it == r.quotients.end() ? "" : exact::to_string(it->second);
}

std::string chern_examples(int which, int n_min, int n_max, const Globals& g) {
    if (n_max < n_min) throw InputError("--n-max must be at least --n-min");
    std::vector<chern::ExampleRow> rows;
    try {
        rows = chern::example_tables(which, n_min, n_max);
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
    const std::string format = g.format_or("csv");
    if (format == "csv") {
        std::string text =
            "n,case,vol_lead,n1_lead,n11_lead,n2_lead,z_vol_lead,z_n1_lead,z_n11_lead,z_n2_lead,"
            "ratio_n1_vol,ratio_z_n1_vol,ratio_n2_n11,ratio_z_n2_n11,distinct_flag\n";
        for (const auto& row : rows) {
            const auto& d = row.determinantal;
            const auto& z = row.zero_locus;
            const std::vector<std::string> cells{std::to_string(row.n),
                                                 "example" + std::to_string(row.which),
                                                 lead_or_empty(d.vol),
                                                 lead_or_empty(d.n1),
                                                 lead_or_empty(d.n11),
                                                 lead_or_empty(d.n2),
                                                 lead_or_empty(z.vol),
                                                 lead_or_empty(z.n1),
                                                 lead_or_empty(z.n11),
                                                 lead_or_empty(z.n2),
                                                 quotient_or_empty(d, "n1/vol"),
                                                 quotient_or_empty(z, "n1/vol"),
                                                 quotient_or_empty(d, "n2/n11"),
                                                 quotient_or_empty(z, "n2/n11"),
                                                 row.distinct ? "true" : "false"};
            for (std::size_t i = 0; i < cells.size(); ++i) text += (i ? "," : "") + cells[i];
            text += "\n";
        }
        return text;
    }
    json out = json::array();
    for (const auto& row : rows)
        out.push_back({{"n", row.n},
                       {"case", "example" + std::to_string(row.which)},
                       {"determinantal", to_json(row.determinantal)},
                       {"zero_locus", to_json(row.zero_locus)},
                       {"distinct", row.distinct}});
    return out.dump(2) + "\n";
}

std::string chern_solve(const std::string& path) {
    const json in = read_json_file(path);
    const chern::DeterminantalProblem p = problem_from_json(in);
    json out = {{"n", p.n},
                {"r", p.r},
                {"r_e", p.e.rank},
                {"r_f", p.f.rank},
                {"codimension", p.codimension()},
                {"locus_dimension", p.locus_dimension()}};
    if (p.locus_dimension() < 0) throw InputError("expected codimension exceeds n: the locus is empty");
    out["difference_class"] = p.difference_class().to_string();
    chern::InvariantReport report;
    if (p.locus_dimension() == 1)
        report = chern::harris_tu_n1(p);
    else if (p.locus_dimension() == 2)
        report = chern::harris_tu_n11_n2(p);
    else {
        report.vol = chern::determinantal_volume(p);
        report.fill_quotients();
    }
    out["determinantal"] = to_json(report);
    if (in.contains("zero_locus")) {
        const chern::BundleSpec g = bundle_from_json(in.at("zero_locus"), p.n);
        try {
            out["zero_locus"] = to_json(chern::zero_locus_invariants(p.n, p.tangent, g));
        } catch (const DomainError& e) {
            throw InputError(e.what());
        }
    }
    return out.dump(2) + "\n";
}

// ---- verify / replay ---------------------------------------------------

int run_verify(const Globals& g, std::string& text) {
    bool failed = false;
    std::ostringstream out;
    for (const auto& s : suite::all_suites()) {
        suite::RunConfig cfg;
        cfg.seed = g.seed_value();
        cfg.trials = g.trials.value_or(s.default_trials);
        cfg.tolerance = g.tol;
        cfg.jobs = std::max(1u, g.jobs);
        const auto r = suite::run_suite(s, cfg);
        failed = failed || !r.passed();
        char line[160];
        std::snprintf(line, sizeof line, "%s  suite %-9s %-22s %zu/%zu", r.passed() ? "PASS" : "FAIL", s.module.c_str(),
                      s.name.c_str(), r.trials - r.failures, r.trials);
        out << line;
        if (r.first_counterexample) out << "  first failure at trial " << r.first_counterexample->trial;
        out << "\n";
    }
    verify::AcceptanceOptions options;
    options.seed = g.seed_value();
    options.jobs = std::max(1u, g.jobs);
    for (int id = 1; id <= verify::kCriterionCount; ++id) {
        const auto r = verify::run_criterion(id, options);
        failed = failed || !r.passed;
        out << verify::format_result(r) << "\n";
    }
    text = out.str();
    return failed ? kExitFailure : kExitOk;
}

int run_replay(const std::string& path, const Globals& g, std::string& text) {
    const suite::Counterexample blob = counterexample_from_json(read_json_file(path));
    const suite::Suite* s = suite::find_suite(blob.suite);
    if (!s) throw InputError("counterexample names unknown suite \"" + blob.suite + "\"");
    const suite::Counterexample again = suite::run_single(*s, blob.seed, blob.trial, blob.tolerance, blob.injected);

    suite::SuiteReport r;
    r.suite = s->name;
    r.trials = 1;
    r.skipped = again.skipped ? 1 : 0;
    r.failures = again.passed ? 0 : 1;
    r.worst_margin = again.margin;
    for (const auto& o : again.values) r.maxima[o.name] = o.value;
    if (!again.passed) r.first_counterexample = again;

    json j = to_json(r, !g.no_timestamp);
    j["seed"] = blob.seed;
    j["trial"] = blob.trial;
    j["tolerance"] = blob.tolerance;
    // The blob stores values as a JSON object, which orders them by name.
    auto by_name = [](std::vector<suite::Observation> v) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        return v;
    };
    j["reproduced"] = again.passed == blob.passed && by_name(again.values) == by_name(blob.values);
    j["counterexample"] = to_json(again);
    text = j.dump(2) + "\n";
    return again.passed ? kExitOk : kExitFailure;
}

int emit(const std::string& text, const Globals& g, std::ostream& out) {
    if (g.out.empty()) {
        out << text;
        return kExitOk;
    }
    std::ofstream f(g.out, std::ios::binary);
    if (!f) throw InputError("cannot write " + g.out);
    f << text;
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Angles between subspaces, Grassmannian models and Chern numbers of determinantal loci", "detloci"};
    app.fallthrough();
    app.require_subcommand(1);

    Globals g;
    app.add_option("--seed", g.seed, "Random seed (decimal or 0x hex)")->capture_default_str();
    app.add_option("--trials", g.trials, "Trials per suite (default: suite-specific)");
    app.add_option("--tol", g.tol, "Comparison tolerance")->capture_default_str();
    app.add_option("--out", g.out, "Write the report to this file instead of stdout");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-timestamp", g.no_timestamp, "Omit wall-clock durations (byte-identical reruns)");
    app.add_option("--jobs", g.jobs, "Worker threads for trial sharding")->check(CLI::PositiveNumber);

    SuiteArgs angle_suite;
    std::string angle_input;
    auto* angles_cmd = app.add_subcommand("angles", "Angle property suites or a subspace-pair report");
    angles_cmd->add_option("--suite", angle_suite.name, "Suite name, or all");
    angles_cmd->add_flag("--list", angle_suite.list, "List suites");
    angles_cmd->add_option("--inject-failure", angle_suite.inject, "Force the given trial to fail")->group("");
    angles_cmd->add_option("--input", angle_input, "JSON file {\"u\": subspace, \"v\": subspace}");

    SuiteArgs grass_suite;
    std::string grass_action, grass_input;
    bool rational = false;
    int order = 0;
    int samples = 1000;
    auto* grass_cmd = app.add_subcommand("grassmann", "Pluecker coordinates, charts, distances, curvature, compounds");
    grass_cmd->add_option("action", grass_action, "pluecker | chart | distance | curvature | compound | rank")
        ->check(CLI::IsMember({"pluecker", "chart", "distance", "curvature", "compound", "rank"}));
    grass_cmd->add_option("--input", grass_input, "JSON input file");
    grass_cmd->add_flag("--rational", rational, "Exact rational arithmetic (pluecker, compound)");
    grass_cmd->add_option("--order", order, "Compound order l");
    grass_cmd->add_option("--samples", samples, "Random tangents for curvature sampling")->check(CLI::NonNegativeNumber);
    grass_cmd->add_option("--suite", grass_suite.name, "Property suite name, or all");
    grass_cmd->add_flag("--list", grass_suite.list, "List suites");
    grass_cmd->add_option("--inject-failure", grass_suite.inject)->group("");

    SuiteArgs chern_suite;
    auto* chern_cmd = app.add_subcommand("chern", "Chern classes, Porteous and Harris-Tu invariants");
    chern_cmd->add_option("--suite", chern_suite.name, "Property suite name, or all");
    chern_cmd->add_flag("--list", chern_suite.list, "List suites");
    chern_cmd->add_option("--inject-failure", chern_suite.inject)->group("");
    int which = 1, n_min = 0, n_max = 0;
    auto* examples_cmd = chern_cmd->add_subcommand("examples", "Example tables against zero loci");
    examples_cmd->add_option("--which", which, "1 or 2")->check(CLI::IsMember({1, 2}));
    examples_cmd->add_option("--n-min", n_min)->required();
    examples_cmd->add_option("--n-max", n_max)->required();
    std::string problem_input;
    auto* solve_cmd = chern_cmd->add_subcommand("solve", "Invariants of a determinantal problem");
    solve_cmd->add_option("--input", problem_input, "Problem JSON file")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Every property suite, then the acceptance suite");
    std::string blob;
    auto* replay_cmd = app.add_subcommand("replay", "Re-run the trial recorded in a counterexample blob");
    replay_cmd->add_option("--blob", blob, "Counterexample JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        std::string text;
        int code = kExitOk;
        if (angles_cmd->parsed()) {
            if (!angle_input.empty())
                text = angles_pair(angle_input);
            else if (!angle_suite.name.empty() || angle_suite.list)
                code = run_suites("angles", angle_suite, g, text);
            else
                throw InputError("angles needs --suite <name>, --list or --input <file>");
        } else if (grass_cmd->parsed()) {
            if (!grass_suite.name.empty() || grass_suite.list) {
                code = run_suites("grassmann", grass_suite, g, text);
            } else {
                if (grass_action.empty()) throw InputError("grassmann needs an action or --suite");
                if (grass_input.empty()) throw InputError("grassmann " + grass_action + " needs --input <file>");
                text = grassmann_action(grass_action, grass_input, rational, order, samples, g);
            }
        } else if (chern_cmd->parsed()) {
            if (examples_cmd->parsed())
                text = chern_examples(which, n_min, n_max, g);
            else if (solve_cmd->parsed())
                text = chern_solve(problem_input);
            else if (!chern_suite.name.empty() || chern_suite.list)
                code = run_suites("chern", chern_suite, g, text);
            else
                throw InputError("chern needs examples, solve or --suite");
        } else if (verify_cmd->parsed()) {
            code = run_verify(g, text);
        } else if (replay_cmd->parsed()) {
            code = run_replay(blob, g, text);
        }
        emit(text, g, out);
        return code;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr);
}

}  // namespace detloci::cli
