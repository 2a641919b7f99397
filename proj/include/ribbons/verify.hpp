#pragma once

#include <string>
#include <vector>

namespace ribbons {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // empty when passed
};

struct SuiteResult {
    std::string suite;
    int n_max = 0;
    std::vector<CheckResult> checks;
    bool passed() const;
};

// Suites: "equivalence", "ribbon", "descents", "cone". Each runs the
// exhaustive identities of its module up to n_max (0 picks the suite's
// default bound). Jobs may run on several threads when RIBBONS_WORKERS is
// set above 1; results are merged in a fixed order either way.
std::vector<std::string> verify_suite_names();
int verify_default_n_max(const std::string& suite);
SuiteResult run_verify_suite(const std::string& suite, int n_max);

int verify_worker_count();

} // namespace ribbons
