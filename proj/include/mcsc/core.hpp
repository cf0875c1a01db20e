#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mcsc/bitset.hpp"

namespace mcsc {

// Dense 0-based indices into an Instance.
using ElementId = int;
using SubsetId = int;

// An instance of the minimum connected set cover problem: a universe of n
// elements, m subsets of it, and a simple undirected auxiliary graph G whose
// vertices are the subset ids. Structural well-formedness (ids in range, no
// self-loops, no duplicate edges) is enforced at construction; feasibility
// (full coverage, connected G) is a separate check so broken instances can
// still be loaded and diagnosed.
class Instance {
public:
    Instance(int n_elements, std::vector<std::vector<ElementId>> subsets,
             std::vector<std::pair<SubsetId, SubsetId>> edges);

    int n() const { return n_; }
    int m() const { return static_cast<int>(subsets_.size()); }

    const Bitset& subset(SubsetId s) const;
    int subset_size(SubsetId s) const { return subset(s).count(); }

    // Neighbors in ascending id order.
    const std::vector<SubsetId>& adj(SubsetId s) const;
    bool has_edge(SubsetId a, SubsetId b) const;

    // Canonical (min,max) pairs, sorted.
    const std::vector<std::pair<SubsetId, SubsetId>>& edges() const { return edges_; }

    Bitset universe() const;

    void check_subset_id(SubsetId s) const;
    void check_element_id(ElementId e) const;

    bool operator==(const Instance& o) const {
        return n_ == o.n_ && subsets_ == o.subsets_ && edges_ == o.edges_;
    }

private:
    int n_ = 0;
    std::vector<Bitset> subsets_;
    std::vector<std::pair<SubsetId, SubsetId>> edges_;
    std::vector<std::vector<SubsetId>> adj_;
};

struct Solution {
    std::vector<SubsetId> chosen;  // sorted, unique
    bool covers_universe = false;
    bool induces_connected = false;

    int size() const { return static_cast<int>(chosen.size()); }
    bool valid_csc() const { return covers_universe && induces_connected; }

    bool operator==(const Solution& o) const = default;
};

struct ValidationReport {
    bool feasible_cover = false;
    bool graph_connected = false;
    std::vector<std::string> issues;

    bool ok() const { return feasible_cover && graph_connected; }
};

// Reports whether a connected set cover can exist at all. Never throws.
ValidationReport validate_instance(const Instance& inst);

// Union of the named subsets' elements.
Bitset coverage_union(const Instance& inst, const std::vector<SubsetId>& ids);

// Evaluates a chosen family: does it cover the universe, and does it induce a
// connected subgraph of G? The empty family counts as not connected, a
// singleton as connected.
Solution check_solution(const Instance& inst, const std::vector<SubsetId>& ids);

}  // namespace mcsc
