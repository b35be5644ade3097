#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace detloci::suite {

inline constexpr std::uint64_t kDefaultSeed = 0xDE7C0C1;
inline constexpr std::size_t kDefaultTrials = 10000;
inline constexpr double kDefaultTolerance = 1e-9;

struct RunConfig {
    std::uint64_t seed = kDefaultSeed;
    std::size_t trials = kDefaultTrials;
    double tolerance = kDefaultTolerance;
    unsigned jobs = 1;
    /// Forces the given trial to be reported as failing (exercises replay).
    std::optional<std::size_t> inject_failure_at;
};

struct Observation {
    std::string name;
    double value = 0.0;

    friend bool operator==(const Observation&, const Observation&) = default;
};

struct TrialOutcome {
    bool passed = true;
    /// Slack of the checked inequality; negative means violated.
    double margin = std::numeric_limits<double>::infinity();
    /// Named values describing the instance; maxima are aggregated per name.
    std::vector<Observation> values;
    /// The generator produced no applicable instance (e.g. a degenerate draw).
    bool skipped = false;
};

using TrialFn = std::function<TrialOutcome(std::mt19937_64& rng, double tol)>;

struct Suite {
    std::string name;
    std::string module;
    std::string description;
    TrialFn trial;
    /// Trial count used when the caller does not override it.
    std::size_t default_trials = kDefaultTrials;
};

struct Counterexample {
    std::string suite;
    std::uint64_t seed = 0;
    std::size_t trial = 0;
    double tolerance = 0.0;
    bool injected = false;
    bool passed = false;
    bool skipped = false;
    double margin = 0.0;
    std::vector<Observation> values;
};

struct SuiteReport {
    std::string suite;
    std::size_t trials = 0;
    std::size_t skipped = 0;
    std::size_t failures = 0;
    double worst_margin = std::numeric_limits<double>::infinity();
    std::optional<Counterexample> first_counterexample;
    std::map<std::string, double> maxima;
    double duration_seconds = 0.0;

    [[nodiscard]] bool passed() const { return failures == 0; }
};

/// Independent per-trial seed, so any trial can be replayed in isolation and
/// sharding does not change results.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

/// Runs one trial and packages it as a counterexample record (pass or fail).
Counterexample run_single(const Suite& suite, std::uint64_t seed, std::size_t trial, double tolerance,
                          bool inject_failure = false);

SuiteReport run_suite(const Suite& suite, const RunConfig& config);

/// Associative, order-independent combination of two shard reports of the
/// same suite.
SuiteReport merge(SuiteReport a, const SuiteReport& b);

/// Hex digest binding a counterexample to its suite, seed, trial, tolerance
/// and injection flag.
std::string counterexample_digest(const Counterexample& c);

}  // namespace detloci::suite
