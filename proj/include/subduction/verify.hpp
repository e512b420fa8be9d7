#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace subduction {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    // Informational checks are reported but do not decide the criterion.
    bool required = true;
};

struct CriterionReport {
    int id = 0;
    std::string title;
    std::vector<CheckResult> checks;
    double seconds = 0;
    double time_limit = 0;  // seconds; 0 means none
    // Every required check passed within the time limit.
    bool passed() const;
};

CriterionReport check_worked_example();
CriterionReport check_schur_weyl();
CriterionReport check_two_row_trace();
CriterionReport check_error_bound();
CriterionReport check_corrections();
CriterionReport check_properties();
CriterionReport check_oracle();

// "paper", "dims", "convergence" or "all".
std::vector<CriterionReport> run_suite(std::string_view suite);

}  // namespace subduction
