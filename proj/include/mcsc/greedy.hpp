#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "mcsc/core.hpp"
#include "mcsc/graph_ops.hpp"

namespace mcsc {

// Weight ratio of a candidate path: path length over newly covered element
// count. den == 0 encodes the infinite ratio of a path that covers nothing
// new; any finite ratio compares smaller than any infinite one.
struct Ratio {
    int num = 0;
    int den = 0;

    bool infinite() const { return den == 0; }

    std::strong_ordering operator<=>(const Ratio& o) const {
        if (infinite() || o.infinite()) {
            if (infinite() && o.infinite()) return std::strong_ordering::equal;
            return infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        // exact cross-multiplication
        auto lhs = static_cast<std::int64_t>(num) * o.den;
        auto rhs = static_cast<std::int64_t>(o.num) * den;
        return lhs <=> rhs;
    }
    bool operator==(const Ratio& o) const { return (*this <=> o) == 0; }
};

enum class StepKind { Initial, Path, Relay };

// One greedy decision. Initial and Relay steps name a single subset; Path
// steps carry the selected candidate. The charge is what each newly covered
// element is billed: 1/|S0| on the initial pick, the weight ratio on a path
// pick, nothing on a relay (a relay covers nothing).
struct GreedyStep {
    StepKind kind = StepKind::Initial;
    SubsetId subset = -1;               // Initial / Relay
    std::optional<PathCandidate> path;  // Path
    std::vector<ElementId> newly_covered;
    std::optional<Ratio> charge;

    bool operator==(const GreedyStep& o) const = default;
};

struct GreedyTrace {
    std::vector<GreedyStep> steps;
    Solution final_solution;
    int relay_count = 0;

    bool operator==(const GreedyTrace& o) const = default;
};

struct GreedyResult {
    Solution solution;
    GreedyTrace trace;
};

// Partial selection at the point the original greedy stalled.
struct Deadlock {
    std::vector<SubsetId> partial;  // sorted
};

using OriginalGreedyResult = std::variant<Solution, Deadlock>;

Ratio weight_ratio(const PathCandidate& path);

// One candidate per subset outside R that is cover-adjacent or graph-adjacent
// to R, each reached by its shortest restricted path; sorted by target id.
// `covered` must equal coverage_union(inst, r_set).
std::vector<PathCandidate> enumerate_candidates(const Instance& inst,
                                                const std::vector<SubsetId>& r_set,
                                                const Bitset& covered);

// Minimum-ratio candidate; ties by shorter path, then smaller target id.
// nullopt when every candidate's ratio is infinite.
std::optional<PathCandidate> select_step(const std::vector<PathCandidate>& candidates);

// Fallback when every candidate covers nothing new: among subsets
// graph-adjacent to R, the one closest (within the subgraph avoiding R) to
// any subset still holding uncovered elements; ties by smaller id.
SubsetId relay_select(const Instance& inst, const std::vector<SubsetId>& r_set,
                      const Bitset& covered);

// Greedy solver considering both cover-adjacent and graph-adjacent
// candidates, with relay fallback. Returns a valid connected set cover on
// every feasible instance, plus the full step trace.
GreedyResult modified_greedy(const Instance& inst);

// Historical variant restricted to cover-adjacent candidates with nonzero new
// coverage. Deadlocks when no such candidate exists while elements remain
// uncovered.
OriginalGreedyResult original_greedy(const Instance& inst);

// Plain set-cover greedy; ignores G entirely.
Solution classic_greedy_set_cover(const Instance& inst);

}  // namespace mcsc
