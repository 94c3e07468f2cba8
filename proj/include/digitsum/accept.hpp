#pragma once

#include <string>
#include <vector>

namespace digitsum {

// One acceptance criterion outcome.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;   // worst values / counts observed
    double seconds = 0.0;
};

// Runs the full acceptance suite.  fixtures_dir must contain figure4.csv and
// figure13.csv for the golden comparison; jobs parallelizes the heavier
// sweeps (results independent of jobs).
std::vector<CriterionResult> run_acceptance(const std::string& fixtures_dir,
                                            int jobs = 1);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace digitsum
