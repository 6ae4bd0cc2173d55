// acceptance_main.cpp
//
// Runs the full verification battery and prints one PASS/FAIL line per
// criterion. C12c (the |g_2 - 2| monotonicity over T in {1e3, 1e4}) is a
// documented expected failure: the second-order main terms of the fourth
// moment dominate the gap at desk height, so the measured trend rises;
// see README "Known red criterion". It still runs and prints its
// measurement; only the process exit code treats it as expected.

#include "zetamoments/acceptance.hpp"

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <set>
#include <string>

int main(int argc, char** argv) {
    const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
    const auto scratch =
        std::filesystem::temp_directory_path() / "zetamoments-acceptance";
    const auto results = zm::acceptance::run_criteria(
        quick ? zm::acceptance::Level::quick : zm::acceptance::Level::full, scratch);

    const std::set<std::string> expected_red = {"C12c"};
    int unexpected = 0;
    for (const auto& r : results) {
        const bool expected_fail = expected_red.contains(r.id);
        std::printf("%s %-5s [%6.1fs] %s\n",
                    r.passed ? "PASS" : (expected_fail ? "XFAIL" : "FAIL"), r.id.c_str(),
                    r.seconds, r.summary.c_str());
        if (!r.passed && !expected_fail) ++unexpected;
    }
    std::printf("%s: %zu criteria, %d unexpected failures\n",
                unexpected == 0 ? "OK" : "FAILED", results.size(), unexpected);
    return unexpected == 0 ? 0 : 1;
}
