#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uk {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    /// Summary of what was checked, or the first failure.
    std::string detail;
    double seconds = 0.0;
};

/// Runs every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance();

/// One "PASS|FAIL [id] title (seconds): detail" line per criterion.
void print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace uk
