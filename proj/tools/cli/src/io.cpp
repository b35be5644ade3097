#include "io.hpp"

#include "detloci/errors.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace detloci::cli {

namespace {

int int_field(const json& j, const char* key) {
    const json& v = require_field(j, key);
    if (!v.is_number_integer()) throw InputError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

double number(const json& j) {
    if (!j.is_number()) throw InputError("expected a number, got " + j.dump());
    return j.get<double>();
}

// Entries are [[re, im], ...] row-major; a bare number is a real entry.
template <class F>
void for_each_entry(const json& j, int& rows, int& cols, F&& f) {
    rows = int_field(j, "rows");
    cols = int_field(j, "cols");
    if (rows < 1 || cols < 1) throw InputError("matrix dimensions must be positive");
    const json& entries = require_field(j, "entries");
    if (!entries.is_array() || entries.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
        throw InputError("\"entries\" must hold rows * cols values");
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        const json& e = entries[idx];
        const int r = static_cast<int>(idx) / cols;
        const int c = static_cast<int>(idx) % cols;
        if (e.is_array()) {
            if (e.size() != 2) throw InputError("complex entries are [re, im] pairs");
            f(r, c, e[0], e[1]);
        } else {
            f(r, c, e, json(0));
        }
    }
}

}  // namespace

const json& require_field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json parse_json_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        std::ostringstream msg;
        msg << origin << ":" << line << ":" << column << ": malformed JSON";
        const std::string what = e.what();
        if (const auto pos = what.find("syntax error"); pos != std::string::npos) msg << " (" << what.substr(pos) << ")";
        throw InputError(msg.str());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str(), path);
}

angles::Subspace subspace_from_json(const json& j) {
    const int n = int_field(j, "ambient_dim");
    if (n < 1) throw InputError("ambient_dim must be positive");
    const json& basis = require_field(j, "basis");
    if (!basis.is_array()) throw InputError("\"basis\" must be an array of vectors");
    std::vector<std::vector<double>> vectors;
    for (const auto& v : basis) {
        if (!v.is_array() || v.size() != static_cast<std::size_t>(n))
            throw InputError("every basis vector must have ambient_dim entries");
        std::vector<double> row;
        for (const auto& x : v) row.push_back(number(x));
        vectors.push_back(std::move(row));
    }
    return angles::Subspace::from_vectors(n, vectors);
}

grassmann::CMatrix cmatrix_from_json(const json& j) {
    int rows = 0, cols = 0;
    grassmann::CMatrix m;
    bool sized = false;
    for_each_entry(j, rows, cols, [&](int r, int c, const json& re, const json& im) {
        if (!sized) {
            m.resize(rows, cols);
            sized = true;
        }
        m(r, c) = {number(re), number(im)};
    });
    return m;
}

exact::Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return exact::Rational(j.get<long long>());
    if (j.is_number_float()) return exact::Rational(j.get<double>());
    if (j.is_string()) {
        try {
            return exact::parse_rational(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(e.what());
        }
    }
    throw InputError("expected a rational (integer, decimal or \"p/q\"), got " + j.dump());
}

exact::ExactMatrix exact_matrix_from_json(const json& j) {
    int rows = 0, cols = 0;
    exact::ExactMatrix m;
    bool sized = false;
    for_each_entry(j, rows, cols, [&](int r, int c, const json& re, const json& im) {
        if (!sized) {
            m = exact::ExactMatrix(rows, cols);
            sized = true;
        }
        m(r, c) = exact::ExactComplex{rational_from_json(re), rational_from_json(im)};
    });
    return m;
}

json to_json(const grassmann::CMatrix& m) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.cols(); ++c) entries.push_back({m(r, c).real(), m(r, c).imag()});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const exact::ExactMatrix& m) {
    json entries = json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            entries.push_back({exact::to_string(m(r, c).re), exact::to_string(m(r, c).im)});
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

chern::BundleSpec bundle_from_json(const json& j, int n, int default_rank) {
    int rank = default_rank;
    if (j.is_object() && j.contains("rank")) rank = int_field(j, "rank");
    if (rank < 0) throw InputError("bundle needs a nonnegative \"rank\"");
    if (!j.is_object() || !j.contains("chern")) return chern::BundleSpec::trivial(rank, n);
    const json& arr = j.at("chern");
    if (!arr.is_array()) throw InputError("\"chern\" must be an array starting at degree 0");
    if (arr.empty()) return chern::BundleSpec::trivial(rank, n);
    if (rational_from_json(arr[0]) != 1) throw InputError("\"chern\"[0] must be 1 (the array starts at c_0)");
    std::vector<exact::Rational> numbers;
    for (std::size_t i = 1; i < arr.size(); ++i) numbers.push_back(rational_from_json(arr[i]));
    try {
        return chern::BundleSpec::make(rank, chern::CohomologyClass::total_from_numbers(n, numbers));
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
}

chern::DeterminantalProblem problem_from_json(const json& j) {
    chern::DeterminantalProblem p;
    p.n = int_field(j, "n");
    if (p.n < 1) throw InputError("n must be positive");
    p.r = int_field(j, "r");
    if (j.contains("r_e") || j.contains("r_f")) {
        // Flat layout: {"n", "r_e", "r_f", "r", "cTM", "cE", "cF"}.
        auto flat = [&](const char* classes, int rank) {
            json b = {{"rank", rank}};
            if (j.contains(classes)) b["chern"] = j.at(classes);
            return bundle_from_json(b, p.n);
        };
        p.tangent = flat("cTM", p.n);
        p.e = flat("cE", int_field(j, "r_e"));
        p.f = flat("cF", int_field(j, "r_f"));
    } else {
        p.tangent = bundle_from_json(j.contains("tangent") ? j.at("tangent") : json::object(), p.n, p.n);
        p.e = bundle_from_json(require_field(j, "e"), p.n);
        p.f = bundle_from_json(require_field(j, "f"), p.n);
    }
    try {
        p.validate();
    } catch (const DomainError& e) {
        throw InputError(e.what());
    }
    return p;
}

json to_json(const chern::Invariant& inv) {
    return {{"raw", inv.raw.to_string()},
            {"per_volume", inv.per_volume.to_string()},
            {"leading_coefficient", exact::to_string(inv.leading_coefficient)},
            {"leading_power", inv.leading_power}};
}

json to_json(const chern::InvariantReport& report) {
    json out = json::object();
    if (report.vol) out["vol"] = to_json(*report.vol);
    if (report.n1) out["n1"] = to_json(*report.n1);
    if (report.n11) out["n11"] = to_json(*report.n11);
    if (report.n2) out["n2"] = to_json(*report.n2);
    json q = json::object();
    for (const auto& [name, value] : report.quotients) q[name] = exact::to_string(value);
    out["quotients"] = q;
    return out;
}

json to_json(const suite::Counterexample& c) {
    json values = json::object();
    for (const auto& o : c.values) values[o.name] = o.value;
    return {{"schema", kCounterexampleSchema},
            {"suite", c.suite},
            {"seed", c.seed},
            {"trial", c.trial},
            {"tolerance", c.tolerance},
            {"injected", c.injected},
            {"passed", c.passed},
            {"skipped", c.skipped},
            {"margin", c.margin},
            {"values", values},
            {"digest", suite::counterexample_digest(c)}};
}

suite::Counterexample counterexample_from_json(const json& j) {
    if (!j.is_object()) throw InputError("counterexample blob must be a JSON object");
    if (!j.contains("schema") || j.at("schema") != kCounterexampleSchema)
        throw InputError(std::string("counterexample schema mismatch: expected ") + kCounterexampleSchema);
    suite::Counterexample c;
    try {
        c.suite = require_field(j, "suite").get<std::string>();
        c.seed = require_field(j, "seed").get<std::uint64_t>();
        c.trial = require_field(j, "trial").get<std::size_t>();
        c.tolerance = require_field(j, "tolerance").get<double>();
        c.injected = require_field(j, "injected").get<bool>();
        c.passed = j.value("passed", false);
        c.skipped = j.value("skipped", false);
        if (j.contains("margin") && j.at("margin").is_number()) c.margin = j.at("margin").get<double>();
        if (j.contains("values"))
            for (const auto& [name, value] : j.at("values").items())
                c.values.push_back({name, value.is_number() ? value.get<double>() : NAN});
    } catch (const json::exception& e) {
        throw InputError(std::string("malformed counterexample blob: ") + e.what());
    }
    const std::string digest = require_field(j, "digest").is_string() ? j.at("digest").get<std::string>() : "";
    if (digest != suite::counterexample_digest(c))
        throw InputError("counterexample digest mismatch: suite, seed, trial, tolerance or injection flag was altered");
    return c;
}

json to_json(const suite::SuiteReport& r, bool timestamp) {
    json maxima = json::object();
    for (const auto& [name, value] : r.maxima) maxima[name] = value;
    json out = {{"suite", r.suite},
                {"trials", r.trials},
                {"failures", r.failures},
                {"skipped", r.skipped},
                {"worst_margin", std::isfinite(r.worst_margin) ? json(r.worst_margin) : json(nullptr)},
                {"maxima", maxima},
                {"first_counterexample", r.first_counterexample ? to_json(*r.first_counterexample) : json(nullptr)}};
    if (timestamp) out["duration_seconds"] = r.duration_seconds;
    return out;
}

}  // namespace detloci::cli
