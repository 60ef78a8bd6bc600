/*
 * Cross-module verification suites: each suite re-derives one layer of the
 * tower's invariants (field arithmetic, local expansions, ledger counts,
 * genus, splitting, zeta consistency) and reports pass/fail with the first
 * failing check spelled out.  Suites scale with the requested level range so
 * small runs stay fast and the default covers the full documented ranges.
 */
#pragma once

#include <string>
#include <vector>

namespace astower::verify {

struct VerifyConfig {
    int i_max = 10;
    int k = 3;
    int precision = 128;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    long long checks = 0;  // number of individual checks evaluated
    std::string detail;    // first failure, empty when passed
};

/* Runs the six suites in order: gf2m, laurent, rami, genus, points, zeta.
 * Every suite runs regardless of earlier failures. */
std::vector<SuiteResult> run_all(const VerifyConfig& cfg);

} // namespace astower::verify
