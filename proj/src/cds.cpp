#include "mcsc/cds_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcsc/core.hpp"

namespace mcsc {

CdsGraph::CdsGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("CdsGraph: negative vertex count");
    adj_.assign(n_, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("CdsGraph: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range [0," +
                                        std::to_string(n_) + ")");
        if (u == v) throw std::invalid_argument("CdsGraph: self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("CdsGraph: duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const std::vector<int>& CdsGraph::adj(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("CdsGraph: vertex id out of range");
    return adj_[v];
}

bool CdsGraph::connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        ++reached;
        for (int v : adj_[u])
            if (!seen[v]) {
                seen[v] = 1;
                stack.push_back(v);
            }
    }
    return reached == n_;
}

Instance reduce_cds(const CdsGraph& h) {
    if (h.vertex_count() < 2)
        throw std::invalid_argument("reduce_cds: graph must have at least 2 vertices");
    if (!h.connected())
        throw std::invalid_argument("reduce_cds: graph is disconnected");

    std::vector<std::vector<ElementId>> subsets(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        subsets[v].push_back(v);
        for (int u : h.adj(v)) subsets[v].push_back(u);
    }
    return Instance(h.vertex_count(), std::move(subsets), h.edges());
}

std::vector<int> lift_solution(const Solution& sol) {
    return sol.chosen;
}

}  // namespace mcsc
