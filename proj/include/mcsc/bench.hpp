#pragma once

#include <cstdint>
#include <string>

#include "mcsc/exact.hpp"

namespace mcsc {

struct BenchConfig {
    int instances = 100;
    std::uint64_t seed = 0;
    int max_n = 12;
    int max_m = 10;
    OracleLimits limits;
};

// Runs the solvers over a seeded corpus of feasible random instances and
// returns the full report text: one line per instance, then a summary with
// the maximum observed ratio, bound violations split by relay/no-relay runs,
// and the deadlock rate of the cover-adjacent-only greedy. Output is a pure
// function of the config.
std::string run_bench(const BenchConfig& cfg);

}  // namespace mcsc
