#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace sdesign {

struct SelftestOptions {
    std::uint64_t seed = 1;  // random groups and factorization seeds
    unsigned jobs = 1;
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::vector<std::string> details;
};

constexpr int criterion_count = 8;

// Each criterion checks its results and its own runtime limit.
CriterionResult run_criterion(int id, const SelftestOptions& options);
// "PASS criterion 1: title (0.12 s, limit 5 s)" followed by indented details
std::vector<std::string> report_lines(const CriterionResult& r, bool details = true);

std::vector<CriterionResult> run_selftest(const SelftestOptions& options,
                                          const std::function<void(const CriterionResult&)>& on_result = {});

}  // namespace sdesign
