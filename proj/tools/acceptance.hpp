#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nyldon::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

struct Options {
    unsigned jobs = 1;
};

// Runs the twelve acceptance criteria in order; `on_result` sees each one as
// soon as it finishes.
std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3 oracle equivalence (1.20 s): ..."
std::string format(const CriterionResult& r);

}  // namespace nyldon::acceptance
