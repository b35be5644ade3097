#include "detloci/suite/runner.hpp"
#include "detloci/suite/suites.hpp"

#include <doctest.h>

#include <set>
#include <stdexcept>

using namespace detloci::suite;

namespace {

// Fails when the first draw is divisible by 7; records the draw.
Suite toy() {
    return {"toy", "test", "", [](std::mt19937_64& rng, double) {
                TrialOutcome o;
                const auto x = rng() % 1000;
                o.values.push_back({"x", static_cast<double>(x)});
                o.passed = x % 7 != 0;
                o.margin = static_cast<double>(x % 7);
                return o;
            }};
}

bool same(const SuiteReport& a, const SuiteReport& b) {
    return a.trials == b.trials && a.failures == b.failures && a.skipped == b.skipped &&
           a.worst_margin == b.worst_margin && a.maxima == b.maxima &&
           a.first_counterexample.has_value() == b.first_counterexample.has_value() &&
           (!a.first_counterexample || (a.first_counterexample->trial == b.first_counterexample->trial &&
                                        a.first_counterexample->values == b.first_counterexample->values));
}

}  // namespace

TEST_SUITE("suite") {

TEST_CASE("trial seeds are distinct and stable") {
    std::set<std::uint64_t> seen;
    for (std::size_t t = 0; t < 1000; ++t) seen.insert(trial_seed(kDefaultSeed, t));
    CHECK(seen.size() == 1000);
    CHECK(trial_seed(1, 5) == trial_seed(1, 5));
    CHECK(trial_seed(1, 5) != trial_seed(2, 5));
}

TEST_CASE("runs are deterministic and independent of sharding") {
    RunConfig cfg;
    cfg.seed = 7;
    cfg.trials = 500;
    const SuiteReport one = run_suite(toy(), cfg);
    CHECK(one.failures > 0);
    CHECK(same(one, run_suite(toy(), cfg)));
    for (unsigned jobs : {2u, 3u, 8u}) {
        cfg.jobs = jobs;
        CHECK(same(one, run_suite(toy(), cfg)));
    }
}

TEST_CASE("merge is associative and order independent") {
    const Suite s = toy();
    auto part = [&](std::uint64_t seed) {
        RunConfig cfg;
        cfg.seed = seed;
        cfg.trials = 50;
        return run_suite(s, cfg);
    };
    const SuiteReport a = part(1), b = part(2), c = part(3);
    CHECK(same(merge(merge(a, b), c), merge(a, merge(b, c))));
    CHECK(same(merge(a, b), merge(b, a)));
}

TEST_CASE("first counterexample replays") {
    RunConfig cfg;
    cfg.seed = 11;
    cfg.trials = 200;
    const SuiteReport r = run_suite(toy(), cfg);
    REQUIRE(r.first_counterexample);
    const Counterexample& c = *r.first_counterexample;
    const Counterexample again = run_single(toy(), c.seed, c.trial, c.tolerance);
    CHECK_FALSE(again.passed);
    CHECK(again.values == c.values);
    CHECK(counterexample_digest(again) == counterexample_digest(c));
}

TEST_CASE("injected failures are reported and digests bind the seed") {
    RunConfig cfg;
    cfg.trials = 20;
    cfg.inject_failure_at = 4;
    const Suite s{"always", "test", "", [](std::mt19937_64&, double) { return TrialOutcome{}; }};
    const SuiteReport r = run_suite(s, cfg);
    CHECK(r.failures == 1);
    REQUIRE(r.first_counterexample);
    CHECK(r.first_counterexample->trial == 4);
    CHECK(r.first_counterexample->injected);

    Counterexample altered = *r.first_counterexample;
    altered.seed += 1;
    CHECK(counterexample_digest(altered) != counterexample_digest(*r.first_counterexample));
}

TEST_CASE("throwing trials count as failures") {
    const Suite s{"throws", "test", "", [](std::mt19937_64&, double) -> TrialOutcome { throw std::runtime_error("x"); }};
    RunConfig cfg;
    cfg.trials = 3;
    CHECK(run_suite(s, cfg).failures == 3);
}

TEST_CASE("suite registry") {
    CHECK(module_suites("angles").size() >= 6);
    CHECK(module_suites("grassmann").size() >= 5);
    CHECK(module_suites("chern").size() >= 4);
    REQUIRE(find_suite("sub_add") != nullptr);
    CHECK(find_suite("sub_add")->module == "angles");
    CHECK(find_suite("nope") == nullptr);
}

TEST_CASE("module property suites pass at reduced trial counts") {
    for (const Suite& s : all_suites()) {
        if (s.name == "rank_variety") continue;  // checked by the acceptance suite
        RunConfig cfg;
        cfg.trials = std::min<std::size_t>(s.default_trials, 300);
        const SuiteReport r = run_suite(s, cfg);
        CAPTURE(s.name);
        CHECK(r.failures == 0);
    }
}

}  // TEST_SUITE
