#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rankbound::cli {

struct Check {
    std::string name;
    double value = 0.0;
    double limit = 0.0;
    bool pass = false;
};

struct SuiteOptions {
    double tol = 1e-10;
    std::uint64_t seed = 1;
    std::uint32_t sieve_limit = 1000000;
    std::uint32_t M = 100000;
    std::vector<double> deltas{0.02, 0.05, 0.1};
    int detector_cases = 60;
};

// E identities, the transform/kernel equivalence and the shifted-E closed forms.
std::vector<Check> identities_suite(const SuiteOptions& opts);
// Randomised zero-count identity cases, rejection of boundary zeros, detector weight.
std::vector<Check> detector_suite(const SuiteOptions& opts);
// Brute-force mollifier sums against their main terms.
std::vector<Check> mollifier_suite(const SuiteOptions& opts);

}  // namespace rankbound::cli
