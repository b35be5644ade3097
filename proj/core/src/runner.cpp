#include "detloci/suite/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <thread>

namespace detloci::suite {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

void absorb(SuiteReport& report, const Suite& suite, std::uint64_t seed, std::size_t trial, double tol, bool inject) {
    Counterexample c = run_single(suite, seed, trial, tol, inject);
    ++report.trials;
    if (c.skipped) ++report.skipped;
    for (const auto& o : c.values) {
        auto [it, inserted] = report.maxima.emplace(o.name, o.value);
        if (!inserted) it->second = std::max(it->second, o.value);
    }
    report.worst_margin = std::min(report.worst_margin, c.margin);
    if (!c.passed) {
        ++report.failures;
        if (!report.first_counterexample || report.first_counterexample->trial > trial)
            report.first_counterexample = std::move(c);
    }
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial) + 0x5851F42D4C957F2Dull));
}

Counterexample run_single(const Suite& suite, std::uint64_t seed, std::size_t trial, double tolerance,
                          bool inject_failure) {
    std::mt19937_64 rng(trial_seed(seed, trial));
    TrialOutcome outcome;
    try {
        outcome = suite.trial(rng, tolerance);
    } catch (const std::exception& e) {
        outcome.passed = false;
        outcome.margin = -std::numeric_limits<double>::infinity();
        outcome.values.push_back({"exception", 1.0});
        std::fprintf(stderr, "suite %s trial %zu threw: %s\n", suite.name.c_str(), trial, e.what());
    }
    Counterexample c;
    c.suite = suite.name;
    c.seed = seed;
    c.trial = trial;
    c.tolerance = tolerance;
    c.injected = inject_failure;
    c.passed = outcome.passed && !inject_failure;
    c.margin = outcome.skipped ? std::numeric_limits<double>::infinity() : outcome.margin;
    c.skipped = outcome.skipped;
    c.values = std::move(outcome.values);
    return c;
}

SuiteReport merge(SuiteReport a, const SuiteReport& b) {
    a.trials += b.trials;
    a.skipped += b.skipped;
    a.failures += b.failures;
    a.worst_margin = std::min(a.worst_margin, b.worst_margin);
    for (const auto& [name, value] : b.maxima) {
        auto [it, inserted] = a.maxima.emplace(name, value);
        if (!inserted) it->second = std::max(it->second, value);
    }
    if (b.first_counterexample &&
        (!a.first_counterexample || b.first_counterexample->trial < a.first_counterexample->trial))
        a.first_counterexample = b.first_counterexample;
    a.duration_seconds = std::max(a.duration_seconds, b.duration_seconds);
    return a;
}

SuiteReport run_suite(const Suite& suite, const RunConfig& config) {
    const auto start = std::chrono::steady_clock::now();
    const unsigned jobs = std::max(1u, std::min<unsigned>(config.jobs, static_cast<unsigned>(std::max<std::size_t>(config.trials, 1))));
    std::vector<SuiteReport> shards(jobs);
    auto work = [&](unsigned shard) {
        SuiteReport& r = shards[shard];
        r.suite = suite.name;
        for (std::size_t t = shard; t < config.trials; t += jobs)
            absorb(r, suite, config.seed, t, config.tolerance, config.inject_failure_at == t);
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned s = 0; s < jobs; ++s) threads.emplace_back(work, s);
        for (auto& t : threads) t.join();
    }
    SuiteReport out;
    out.suite = suite.name;
    for (const auto& s : shards) out = merge(std::move(out), s);
    out.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

std::string counterexample_digest(const Counterexample& c) {
    // FNV-1a over a canonical rendering.
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s|%llu|%zu|%.17g|%d", c.suite.c_str(), static_cast<unsigned long long>(c.seed),
                  c.trial, c.tolerance, c.injected ? 1 : 0);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const char* p = buf; *p; ++p) {
        h ^= static_cast<unsigned char>(*p);
        h *= 0x100000001b3ull;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

}  // namespace detloci::suite
