#pragma once

// The acceptance suite: thirteen numbered checks, each with a runtime budget,
// run in order by `orbsmooth verify` and by the acceptance test binary.

#include <functional>
#include <string>
#include <vector>

namespace orbsmooth {

enum class Tier { Quick, Full };

struct AcceptanceOptions {
    Tier tier = Tier::Quick;
    std::string data_dir;  // holds catalog_reference.csv
    int threads = 1;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;     // deterministic summary of the measured quantities
    double seconds = 0.0;   // wall time, not part of the report line
    double budget = 0.0;
};

struct CriterionInfo {
    int id = 0;
    std::string name;
    double budget_seconds = 0.0;
};

const std::vector<CriterionInfo>& acceptance_criteria();

// Runs one criterion. A criterion also fails when it exceeds its budget.
CriterionResult run_criterion(int id, const AcceptanceOptions& options);

// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [01] catalog fidelity: ..." with no timing, so reports compare byte for byte.
std::string format_result_line(const CriterionResult& r);

}  // namespace orbsmooth
