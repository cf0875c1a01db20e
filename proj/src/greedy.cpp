#include "mcsc/greedy.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace mcsc {

namespace {

void require_feasible(const Instance& inst) {
    auto rep = validate_instance(inst);
    if (rep.ok()) return;
    std::string msg = "infeasible instance:";
    for (const auto& issue : rep.issues) msg += " " + issue;
    throw std::invalid_argument(msg);
}

// Maximum-cardinality subset, ties by smallest id.
SubsetId initial_pick(const Instance& inst) {
    SubsetId best = 0;
    for (SubsetId s = 1; s < inst.m(); ++s)
        if (inst.subset_size(s) > inst.subset_size(best)) best = s;
    return best;
}

struct SolverState {
    explicit SolverState(const Instance& inst)
        : in_r(inst.m()), covered(inst.n()), universe(inst.universe()) {}

    std::vector<SubsetId> r_order;  // insertion order
    Bitset in_r;
    Bitset covered;
    Bitset universe;

    bool done() const { return covered == universe; }

    void add_subset(SubsetId s, const Instance& inst) {
        if (in_r.test(s)) return;
        in_r.set(s);
        r_order.push_back(s);
        covered |= inst.subset(s);
    }
};

GreedyStep make_initial_step(const Instance& inst, SubsetId s0) {
    GreedyStep step;
    step.kind = StepKind::Initial;
    step.subset = s0;
    step.newly_covered = inst.subset(s0).to_vector();
    step.charge = Ratio{1, inst.subset_size(s0)};
    return step;
}

}  // namespace

Ratio weight_ratio(const PathCandidate& path) {
    return Ratio{path.length, path.new_coverage.count()};
}

std::vector<PathCandidate> enumerate_candidates(const Instance& inst,
                                                const std::vector<SubsetId>& r_set,
                                                const Bitset& covered) {
    Bitset in_r(inst.m());
    for (SubsetId s : r_set) in_r.set(s);

    std::vector<PathCandidate> out;
    for (SubsetId s = 0; s < inst.m(); ++s) {
        if (in_r.test(s)) continue;
        bool cover_adj = inst.subset(s).intersects(covered);
        bool graph_adj = std::any_of(inst.adj(s).begin(), inst.adj(s).end(),
                                     [&](SubsetId v) { return in_r.test(v); });
        if (!cover_adj && !graph_adj) continue;
        out.push_back(shortest_r_path(inst, r_set, s));
    }
    return out;  // ascending target id by construction
}

std::optional<PathCandidate> select_step(const std::vector<PathCandidate>& candidates) {
    if (candidates.empty())
        throw std::logic_error("select_step: empty candidate list");
    const PathCandidate* best = nullptr;
    Ratio best_ratio;
    for (const auto& cand : candidates) {
        Ratio r = weight_ratio(cand);
        if (r.infinite()) continue;
        if (best == nullptr || r < best_ratio ||
            (r == best_ratio && cand.length < best->length)) {
            best = &cand;
            best_ratio = r;
        }
        // equal ratio and length: keep the earlier (smaller target id) candidate
    }
    if (best == nullptr) return std::nullopt;
    return *best;
}

SubsetId relay_select(const Instance& inst, const std::vector<SubsetId>& r_set,
                      const Bitset& covered) {
    Bitset in_r(inst.m());
    for (SubsetId s : r_set) in_r.set(s);
    Bitset uncovered = inst.universe().minus(covered);

    // Multi-source BFS within S \ R from every subset holding uncovered elements.
    constexpr int kInf = std::numeric_limits<int>::max();
    std::vector<int> d(inst.m(), kInf);
    std::deque<SubsetId> queue;
    for (SubsetId s = 0; s < inst.m(); ++s)
        if (!in_r.test(s) && inst.subset(s).intersects(uncovered)) {
            d[s] = 0;
            queue.push_back(s);
        }
    while (!queue.empty()) {
        SubsetId u = queue.front();
        queue.pop_front();
        for (SubsetId v : inst.adj(u))
            if (!in_r.test(v) && d[v] == kInf) {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
    }

    SubsetId best = -1;
    for (SubsetId s = 0; s < inst.m(); ++s) {
        if (in_r.test(s) || d[s] == kInf) continue;
        bool graph_adj = std::any_of(inst.adj(s).begin(), inst.adj(s).end(),
                                     [&](SubsetId v) { return in_r.test(v); });
        if (!graph_adj) continue;
        if (best == -1 || d[s] < d[best]) best = s;
    }
    if (best == -1)
        throw std::logic_error("relay_select: no reachable relay (infeasible instance?)");
    return best;
}

GreedyResult modified_greedy(const Instance& inst) {
    require_feasible(inst);

    SolverState st(inst);
    GreedyTrace trace;

    SubsetId s0 = initial_pick(inst);
    st.add_subset(s0, inst);
    trace.steps.push_back(make_initial_step(inst, s0));

    while (!st.done()) {
        auto candidates = enumerate_candidates(inst, st.r_order, st.covered);
        auto picked = select_step(candidates);
        if (picked) {
            GreedyStep step;
            step.kind = StepKind::Path;
            step.path = *picked;
            step.newly_covered = picked->new_coverage.to_vector();
            step.charge = weight_ratio(*picked);
            for (std::size_t i = 1; i < picked->vertices.size(); ++i)
                st.add_subset(picked->vertices[i], inst);
            trace.steps.push_back(std::move(step));
        } else {
            SubsetId relay = relay_select(inst, st.r_order, st.covered);
            GreedyStep step;
            step.kind = StepKind::Relay;
            step.subset = relay;
            st.add_subset(relay, inst);
            trace.steps.push_back(std::move(step));
            ++trace.relay_count;
        }
    }

    trace.final_solution = check_solution(inst, st.r_order);
    return GreedyResult{trace.final_solution, std::move(trace)};
}

OriginalGreedyResult original_greedy(const Instance& inst) {
    require_feasible(inst);

    SolverState st(inst);
    st.add_subset(initial_pick(inst), inst);

    while (!st.done()) {
        // Only cover-adjacent candidates that make progress are admissible.
        std::vector<PathCandidate> candidates;
        for (SubsetId s = 0; s < inst.m(); ++s) {
            if (st.in_r.test(s)) continue;
            if (!inst.subset(s).intersects(st.covered)) continue;
            if (inst.subset(s).minus(st.covered).none()) continue;
            candidates.push_back(shortest_r_path(inst, st.r_order, s));
        }
        if (candidates.empty()) {
            std::vector<SubsetId> partial = st.in_r.to_vector();
            return Deadlock{std::move(partial)};
        }
        auto picked = select_step(candidates);
        for (std::size_t i = 1; i < picked->vertices.size(); ++i)
            st.add_subset(picked->vertices[i], inst);
    }
    return check_solution(inst, st.r_order);
}

Solution classic_greedy_set_cover(const Instance& inst) {
    std::vector<SubsetId> all(inst.m());
    for (SubsetId s = 0; s < inst.m(); ++s) all[s] = s;
    if (!(coverage_union(inst, all) == inst.universe()))
        throw std::invalid_argument("classic_greedy_set_cover: subsets do not cover the universe");

    Bitset covered(inst.n());
    Bitset chosen(inst.m());
    const Bitset universe = inst.universe();
    while (!(covered == universe)) {
        SubsetId best = -1;
        int best_gain = 0;
        for (SubsetId s = 0; s < inst.m(); ++s) {
            if (chosen.test(s)) continue;
            int gain = inst.subset(s).minus(covered).count();
            if (gain > best_gain) {
                best = s;
                best_gain = gain;
            }
        }
        if (best == -1) throw std::logic_error("classic_greedy_set_cover: stalled");
        chosen.set(best);
        covered |= inst.subset(best);
    }
    return check_solution(inst, chosen.to_vector());
}

}  // namespace mcsc
