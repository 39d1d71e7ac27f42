#pragma once

// Acceptance suite: one check per published claim or structural identity the
// library must reproduce. Shared by the test binary and `tfspec verify`.

#include <string>
#include <vector>

namespace tfspec {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

inline constexpr int kCriterionCount = 12;

/// Runs criterion `id` (1..kCriterionCount). Exceptions become failures.
CriterionResult run_criterion(int id);

std::vector<CriterionResult> run_acceptance();

/// "PASS  C01 name: detail"
std::string format_result(const CriterionResult& r);

}  // namespace tfspec
