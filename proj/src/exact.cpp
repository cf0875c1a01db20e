#include "mcsc/exact.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "mcsc/bitset.hpp"

namespace mcsc {

namespace {

void check_cancel(const OracleLimits& limits) {
    if (limits.cancel != nullptr && limits.cancel->load(std::memory_order_relaxed))
        throw CancelledError();
}

// Visits k-combinations of {0,...,count-1} in lexicographic order; stops when
// the visitor returns true. Returns whether any combination was accepted.
template <class Visit>
bool for_each_combination(int count, int k, Visit visit) {
    if (k > count) return false;
    std::vector<int> ids(k);
    for (int i = 0; i < k; ++i) ids[i] = i;
    for (;;) {
        if (visit(ids)) return true;
        int i = k - 1;
        while (i >= 0 && ids[i] == count - k + i) --i;
        if (i < 0) return false;
        ++ids[i];
        for (int j = i + 1; j < k; ++j) ids[j] = ids[j - 1] + 1;
    }
}

// Smallest family satisfying `accept`, by increasing cardinality; the first
// hit is the lexicographically smallest witness of minimum size.
template <class Accept>
std::optional<std::vector<int>> smallest_family(int count, Accept accept,
                                                const OracleLimits& limits) {
    for (int k = 0; k <= count; ++k) {
        std::vector<int> witness;
        bool found = for_each_combination(count, k, [&](const std::vector<int>& ids) {
            check_cancel(limits);
            if (!accept(ids)) return false;
            witness = ids;
            return true;
        });
        if (found) return witness;
    }
    return std::nullopt;
}

void check_subset_cap(const Instance& inst, const OracleLimits& limits) {
    if (inst.m() > limits.max_subsets)
        throw std::invalid_argument("exact search: m=" + std::to_string(inst.m()) +
                                    " exceeds max_subsets=" + std::to_string(limits.max_subsets));
}

void check_cover_feasible(const Instance& inst) {
    std::vector<SubsetId> all(inst.m());
    for (SubsetId s = 0; s < inst.m(); ++s) all[s] = s;
    if (!(coverage_union(inst, all) == inst.universe()))
        throw std::invalid_argument("exact search: subsets do not cover the universe");
}

}  // namespace

Solution min_set_cover(const Instance& inst, const OracleLimits& limits) {
    check_subset_cap(inst, limits);
    check_cover_feasible(inst);
    Bitset universe = inst.universe();
    auto witness = smallest_family(
        inst.m(),
        [&](const std::vector<int>& ids) { return coverage_union(inst, ids) == universe; },
        limits);
    return check_solution(inst, *witness);  // full family always covers
}

Solution min_csc(const Instance& inst, const OracleLimits& limits) {
    check_subset_cap(inst, limits);
    check_cover_feasible(inst);
    Bitset universe = inst.universe();
    const bool empty_universe = !universe.any();

    auto connected_family = [&](const std::vector<int>& ids) {
        Bitset in_set = Bitset::from(inst.m(), ids);
        Bitset seen(inst.m());
        std::vector<int> stack{ids.front()};
        seen.set(ids.front());
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int v : inst.adj(u))
                if (in_set.test(v) && !seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        return reached == static_cast<int>(ids.size());
    };

    auto witness = smallest_family(
        inst.m(),
        [&](const std::vector<int>& ids) {
            if (!(coverage_union(inst, ids) == universe)) return false;
            if (ids.empty()) return empty_universe;
            return connected_family(ids);
        },
        limits);
    if (!witness)
        throw std::runtime_error("min_csc: no connected set cover exists");
    return check_solution(inst, *witness);
}

std::vector<int> min_cds(const CdsGraph& h, const OracleLimits& limits) {
    if (h.vertex_count() < 2)
        throw std::invalid_argument("min_cds: graph must have at least 2 vertices");
    if (h.vertex_count() > limits.max_vertices)
        throw std::invalid_argument("min_cds: " + std::to_string(h.vertex_count()) +
                                    " vertices exceeds max_vertices=" +
                                    std::to_string(limits.max_vertices));
    if (!h.connected())
        throw std::invalid_argument("min_cds: graph is disconnected");

    const int n = h.vertex_count();
    std::vector<Bitset> closed(n);
    for (int v = 0; v < n; ++v) {
        closed[v] = Bitset(n);
        closed[v].set(v);
        for (int u : h.adj(v)) closed[v].set(u);
    }
    Bitset everyone(n);
    for (int v = 0; v < n; ++v) everyone.set(v);

    auto dominates = [&](const std::vector<int>& ids) {
        Bitset dom(n);
        for (int v : ids) dom |= closed[v];
        return dom == everyone;
    };
    auto connected_in_h = [&](const std::vector<int>& ids) {
        Bitset in_set = Bitset::from(n, ids);
        Bitset seen(n);
        std::vector<int> stack{ids.front()};
        seen.set(ids.front());
        int reached = 0;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            ++reached;
            for (int v : h.adj(u))
                if (in_set.test(v) && !seen.test(v)) {
                    seen.set(v);
                    stack.push_back(v);
                }
        }
        return reached == static_cast<int>(ids.size());
    };

    auto witness = smallest_family(
        n,
        [&](const std::vector<int>& ids) {
            return !ids.empty() && dominates(ids) && connected_in_h(ids);
        },
        limits);
    return *witness;  // the full vertex set of a connected graph is a CDS
}

}  // namespace mcsc
