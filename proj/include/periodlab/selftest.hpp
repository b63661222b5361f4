#pragma once

// Oracle suites, one per acceptance criterion. Each suite compares a library
// routine against an independent brute-force computation.

#include <string>
#include <vector>

#include "periodlab/abgroup_json.hpp"

namespace periodlab {

struct SuiteResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

constexpr int kSuiteCount = 9;

/// Never throws: an exception inside a suite is reported as a failure.
SuiteResult run_suite(int id, int jobs = 1);
std::vector<SuiteResult> run_selftest(int jobs = 1);

Json to_json(const SuiteResult& r);

}  // namespace periodlab
