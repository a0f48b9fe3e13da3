#pragma once
// Acceptance suite: numbered end-to-end checks over every module.

#include <functional>
#include <string>
#include <vector>

namespace ce {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct VerifyOptions {
    int max_period = 10;  // word length bound for the three-way root check
    int jobs = 1;
    int teapot_period = 20;
};

constexpr int kCriterionCount = 12;

std::string criterion_name(int id);
// Runs one criterion; domain errors are reported as failures.
CriterionResult run_criterion(int id, const VerifyOptions& opt = {});
// Runs the selected criteria (all when empty), calling report after each.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& opt, const std::vector<int>& ids = {},
                                            const std::function<void(const CriterionResult&)>& report = {});

}  // namespace ce
