#include "mcsc/graph_ops.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace mcsc {

namespace {

constexpr int kUnreached = -1;

// BFS distances from `source`, restricted to vertices where allowed(v) holds.
template <class Allowed>
std::vector<int> bfs_dist(const Instance& inst, SubsetId source, Allowed allowed) {
    std::vector<int> d(inst.m(), kUnreached);
    std::deque<SubsetId> queue;
    d[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        SubsetId u = queue.front();
        queue.pop_front();
        for (SubsetId v : inst.adj(u))
            if (d[v] == kUnreached && allowed(v)) {
                d[v] = d[u] + 1;
                queue.push_back(v);
            }
    }
    return d;
}

std::vector<int> bfs_dist(const Instance& inst, SubsetId source) {
    return bfs_dist(inst, source, [](SubsetId) { return true; });
}

}  // namespace

std::optional<int> dist(const Instance& inst, SubsetId a, SubsetId b) {
    inst.check_subset_id(a);
    inst.check_subset_id(b);
    if (a == b) return 0;
    int d = bfs_dist(inst, a)[b];
    if (d == kUnreached) return std::nullopt;
    return d;
}

bool cover_adjacent(const Instance& inst, SubsetId a, SubsetId b) {
    inst.check_subset_id(a);
    inst.check_subset_id(b);
    if (a == b) throw std::invalid_argument("cover_adjacent: a set is not cover-adjacent to itself");
    return inst.subset(a).intersects(inst.subset(b));
}

bool graph_adjacent(const Instance& inst, SubsetId a, SubsetId b) {
    return inst.has_edge(a, b);
}

int cover_diameter(const Instance& inst) {
    const int m = inst.m();
    if (m == 0)
        throw std::invalid_argument("cover_diameter: auxiliary graph is disconnected");
    auto from_zero = bfs_dist(inst, 0);
    if (std::count(from_zero.begin(), from_zero.end(), kUnreached) > 0)
        throw std::invalid_argument("cover_diameter: auxiliary graph is disconnected");
    int best = 0;
    for (SubsetId a = 0; a < m; ++a) {
        if (!inst.subset(a).any()) continue;
        auto d = bfs_dist(inst, a);
        for (SubsetId b = a + 1; b < m; ++b)
            if (inst.subset(a).intersects(inst.subset(b))) best = std::max(best, d[b]);
    }
    return std::max(best, 1);
}

bool induced_connected(const Instance& inst, const std::vector<SubsetId>& ids) {
    return check_solution(inst, ids).induces_connected;
}

PathCandidate shortest_r_path(const Instance& inst, const std::vector<SubsetId>& r_set,
                              SubsetId target) {
    if (r_set.empty()) throw std::invalid_argument("shortest_r_path: empty R");
    inst.check_subset_id(target);
    Bitset in_r(inst.m());
    for (SubsetId s : r_set) {
        inst.check_subset_id(s);
        in_r.set(s);
    }
    if (in_r.test(target))
        throw std::invalid_argument("shortest_r_path: target " + std::to_string(target) +
                                    " already in R");

    // Distances to the target within the subgraph induced by S \ R.
    auto to_target = bfs_dist(inst, target, [&](SubsetId v) { return !in_r.test(v); });

    // Shortest overall length, entering through the cheapest frontier vertex.
    int best_len = kUnreached;
    for (SubsetId r = 0; r < inst.m(); ++r) {
        if (!in_r.test(r)) continue;
        for (SubsetId v : inst.adj(r))
            if (!in_r.test(v) && to_target[v] != kUnreached) {
                int len = to_target[v] + 1;
                if (best_len == kUnreached || len < best_len) best_len = len;
            }
    }
    if (best_len == kUnreached)
        throw std::runtime_error("shortest_r_path: target " + std::to_string(target) +
                                 " unreachable from R outside R");

    // Lexicographically smallest sequence: smallest feasible start in R, then
    // greedily the smallest next vertex that stays on a shortest path.
    PathCandidate path;
    path.target = target;
    path.length = best_len;

    SubsetId start = -1;
    for (SubsetId r = 0; r < inst.m() && start == -1; ++r) {
        if (!in_r.test(r)) continue;
        for (SubsetId v : inst.adj(r))
            if (!in_r.test(v) && to_target[v] == best_len - 1) {
                start = r;
                break;
            }
    }
    path.vertices.push_back(start);

    SubsetId cur = start;
    for (int need = best_len - 1;; --need) {
        SubsetId next = -1;
        for (SubsetId v : inst.adj(cur))
            if (!in_r.test(v) && to_target[v] == need) {
                next = v;
                break;
            }
        if (next == -1) throw std::logic_error("shortest_r_path: walk left the shortest paths");
        path.vertices.push_back(next);
        cur = next;
        if (need == 0) break;
    }

    Bitset covered = coverage_union(inst, r_set);
    Bitset on_path(inst.n());
    for (SubsetId v : path.vertices) on_path |= inst.subset(v);
    path.new_coverage = on_path.minus(covered);
    return path;
}

}  // namespace mcsc
