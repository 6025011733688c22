#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace partalg {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    double seconds = 0.0;
    std::string detail;
};

// Suites: "core" (structural checks), "paper" (theorem reproductions), "all".
std::vector<CriterionResult> run_verify(const std::string& suite, uint64_t seed);

bool all_passed(const std::vector<CriterionResult>& results);
std::string format_results(const std::vector<CriterionResult>& results);

}  // namespace partalg
