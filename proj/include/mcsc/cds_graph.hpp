#pragma once

#include <utility>
#include <vector>

namespace mcsc {

class Instance;
struct Solution;

// Simple undirected graph for the connected-dominating-set side of the
// reduction; vertex ids dense in [0, vertex_count).
class CdsGraph {
public:
    CdsGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& adj(int v) const;
    bool connected() const;

    bool operator==(const CdsGraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // canonical (min,max), sorted
    std::vector<std::vector<int>> adj_;
};

// Derives a connected-set-cover instance from the CDS problem on H: the
// universe is V(H), subset v is the closed neighborhood of v, and the
// auxiliary graph equals H (subset ids mirror vertex ids).
Instance reduce_cds(const CdsGraph& h);

// Maps a solution on a reduced instance back to vertices of H; identity on ids.
std::vector<int> lift_solution(const Solution& sol);

}  // namespace mcsc
