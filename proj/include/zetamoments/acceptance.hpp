// acceptance.hpp
//
// The verification checklist: every identity and prediction the library
// claims, runnable as one battery. quick covers the exact/rational
// identities (< 1 min); full adds the sieve-scale correlation runs, the
// Euler products at large cutoff, and the quadrature probes.

#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace zm::acceptance {

struct CriterionResult {
    std::string id;       // "C01" .. "C14d"
    std::string summary;  // what was checked, with measured values
    bool passed = false;
    double seconds = 0;
};

enum class Level { quick, full };

// Runs the battery; scratch_dir holds sieve caches (created if missing).
std::vector<CriterionResult> run_criteria(Level level,
                                          const std::filesystem::path& scratch_dir);

// True iff every criterion passed.
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace zm::acceptance
