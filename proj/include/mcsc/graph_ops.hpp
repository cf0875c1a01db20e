#pragma once

#include <optional>
#include <vector>

#include "mcsc/core.hpp"

namespace mcsc {

// A candidate path from the current selection R to a target subset: the first
// vertex lies in R, every later vertex outside it, and the last vertex is the
// target. `length` counts the non-R vertices, per the path-length convention
// of the greedy algorithm.
struct PathCandidate {
    SubsetId target = -1;
    std::vector<SubsetId> vertices;  // [r, v1, ..., target]
    int length = 0;                  // vertices.size() - 1
    Bitset new_coverage;             // elements covered by the path but not by R

    bool operator==(const PathCandidate& o) const = default;
};

// Number of edges on a shortest a-b path in G; nullopt when unreachable.
std::optional<int> dist(const Instance& inst, SubsetId a, SubsetId b);

// True iff the two (distinct) subsets intersect.
bool cover_adjacent(const Instance& inst, SubsetId a, SubsetId b);

// True iff {a,b} is an edge of G.
bool graph_adjacent(const Instance& inst, SubsetId a, SubsetId b);

// Maximum G-distance between any two cover-adjacent subsets; 1 by convention
// when no cover-adjacent pair exists. Requires G connected.
int cover_diameter(const Instance& inst);

// True iff ids is nonempty and induces a connected subgraph of G.
bool induced_connected(const Instance& inst, const std::vector<SubsetId>& ids);

// Shortest path from R to `target` whose vertices after the first avoid R.
// Among shortest paths, returns the lexicographically smallest vertex
// sequence read from R outward. Always succeeds on connected G.
PathCandidate shortest_r_path(const Instance& inst, const std::vector<SubsetId>& r_set,
                              SubsetId target);

}  // namespace mcsc
