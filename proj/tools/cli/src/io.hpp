#pragma once

#include "detloci/angles/subspace.hpp"
#include "detloci/chern/chern.hpp"
#include "detloci/grassmann/grassmann.hpp"
#include "detloci/suite/runner.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace detloci::cli {

using nlohmann::json;

/// Bad user input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kCounterexampleSchema = "detloci.counterexample.v1";

const json& require_field(const json& j, const char* key);

/// Parses a JSON file; syntax errors report line and column.
json read_json_file(const std::string& path);
json parse_json_text(const std::string& text, const std::string& origin);

/// {"ambient_dim": n, "basis": [[...], ...]}
angles::Subspace subspace_from_json(const json& j);

/// {"rows": r, "cols": N, "entries": [[re, im], ...]} row-major.
grassmann::CMatrix cmatrix_from_json(const json& j);
/// Same layout; entries may be integers, exact decimals or "p/q" strings.
exact::ExactMatrix exact_matrix_from_json(const json& j);

json to_json(const grassmann::CMatrix& m);
json to_json(const exact::ExactMatrix& m);

exact::Rational rational_from_json(const json& j);

/// {"rank": r, "chern": ["1", "c1", ...]} over a base of dimension n; the
/// array starts at degree 0, so entry 0 must be 1; a missing array means
/// trivial.
chern::BundleSpec bundle_from_json(const json& j, int n, int default_rank = -1);
/// {"n", "r", "tangent"?, "e", "f"} with bundle objects, or the flat
/// {"n", "r_e", "r_f", "r", "cTM"?, "cE"?, "cF"?} with the same arrays.
chern::DeterminantalProblem problem_from_json(const json& j);

json to_json(const chern::Invariant& inv);
json to_json(const chern::InvariantReport& report);

json to_json(const suite::Counterexample& c);
/// Validates schema version and digest; throws InputError otherwise.
suite::Counterexample counterexample_from_json(const json& j);

json to_json(const suite::SuiteReport& r, bool timestamp);

}  // namespace detloci::cli
