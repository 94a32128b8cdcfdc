#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morphevo::accept {

struct CriterionResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    bool include_smoke = true; // the desk-scale grid check is the slow one
    std::string scratch_dir;   // empty -> a fresh directory under the system temp dir
};

// Runs every criterion, streaming one PASS/FAIL line per criterion as it
// completes.
std::vector<CriterionResult> run_all(const Options& options, std::ostream& out);

bool all_passed(const std::vector<CriterionResult>& results);

} // namespace morphevo::accept
