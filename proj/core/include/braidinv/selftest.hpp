#ifndef BRAIDINV_SELFTEST_HPP
#define BRAIDINV_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "braidinv/weights.hpp"

namespace braidinv {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SelftestConfig {
    std::int64_t step_budget = kDefaultStepBudget;
    std::uint64_t seed = 20240801;
};

// The full property suite, one result per criterion. Deterministic for a
// fixed config.
std::vector<CheckResult> run_selftest(const SelftestConfig& cfg = SelftestConfig{});

}  // namespace braidinv

#endif
