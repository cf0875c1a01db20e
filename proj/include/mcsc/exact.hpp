#pragma once

#include <atomic>
#include <stdexcept>
#include <vector>

#include "mcsc/cds_graph.hpp"
#include "mcsc/core.hpp"

namespace mcsc {

// Caps for the exhaustive searches, plus an optional cooperative cancellation
// flag checked between combinations.
struct OracleLimits {
    int max_subsets = 20;
    int max_vertices = 16;
    const std::atomic<bool>* cancel = nullptr;
};

struct CancelledError : std::runtime_error {
    CancelledError() : std::runtime_error("exact search cancelled") {}
};

// Minimum-cardinality set cover; among minimum covers, the lexicographically
// smallest id set. Enumerates combinations by increasing cardinality.
Solution min_set_cover(const Instance& inst, const OracleLimits& limits = {});

// Minimum-cardinality cover that also induces a connected subgraph of G.
Solution min_csc(const Instance& inst, const OracleLimits& limits = {});

// Minimum connected dominating set of H; deterministic lexicographic witness.
std::vector<int> min_cds(const CdsGraph& h, const OracleLimits& limits = {});

}  // namespace mcsc
