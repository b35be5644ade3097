// Acceptance suite: one PASS/FAIL line per criterion.
//   detloci_acceptance [--criterion N] [--seed S] [--jobs J]
#include "detloci/verify/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>

int main(int argc, char** argv) {
    detloci::verify::AcceptanceOptions options;
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        const bool has_value = i + 1 < argc;
        if (!std::strcmp(argv[i], "--criterion") && has_value)
            only = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--seed") && has_value)
            options.seed = std::stoull(argv[++i], nullptr, 0);
        else if (!std::strcmp(argv[i], "--jobs") && has_value)
            options.jobs = static_cast<unsigned>(std::atoi(argv[++i]));
        else {
            std::fprintf(stderr, "usage: %s [--criterion N] [--seed S] [--jobs J]\n", argv[0]);
            return 2;
        }
    }
    if (only < 0 || only > detloci::verify::kCriterionCount) {
        std::fprintf(stderr, "criterion must be in 1..%d\n", detloci::verify::kCriterionCount);
        return 2;
    }
    int failures = 0;
    for (int id = 1; id <= detloci::verify::kCriterionCount; ++id) {
        if (only != 0 && id != only) continue;
        const auto r = detloci::verify::run_criterion(id, options);
        std::printf("%s\n", detloci::verify::format_result(r).c_str());
        std::fflush(stdout);
        if (!r.passed) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
