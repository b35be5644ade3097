#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace detloci::verify {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0xDE7C0C1;
    unsigned jobs = 1;
};

inline constexpr int kCriterionCount = 10;

/// Runs one numbered criterion (1..10); throws std::out_of_range otherwise.
CriterionResult run_criterion(int id, const AcceptanceOptions& options = {});

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {});

/// "PASS  AC03 cross_k_matching  ...  (0.01 s)"
std::string format_result(const CriterionResult& r);

}  // namespace detloci::verify
