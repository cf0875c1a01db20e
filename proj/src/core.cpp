#include "mcsc/core.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcsc {

Instance::Instance(int n_elements, std::vector<std::vector<ElementId>> subsets,
                   std::vector<std::pair<SubsetId, SubsetId>> edges)
    : n_(n_elements) {
    if (n_elements < 0) throw std::invalid_argument("Instance: negative universe size");
    const int m = static_cast<int>(subsets.size());

    subsets_.reserve(m);
    for (int i = 0; i < m; ++i) {
        Bitset s(n_);
        for (ElementId e : subsets[i]) {
            if (e < 0 || e >= n_)
                throw std::invalid_argument("Instance: subset " + std::to_string(i) + ": element " +
                                            std::to_string(e) + " out of range [0," +
                                            std::to_string(n_) + ")");
            s.set(e);
        }
        subsets_.push_back(std::move(s));
    }

    adj_.assign(m, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= m || v < 0 || v >= m)
            throw std::invalid_argument("Instance: edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") out of range [0," +
                                        std::to_string(m) + ")");
        if (u == v)
            throw std::invalid_argument("Instance: self-loop at subset " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Instance: duplicate edge");
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

const Bitset& Instance::subset(SubsetId s) const {
    check_subset_id(s);
    return subsets_[s];
}

const std::vector<SubsetId>& Instance::adj(SubsetId s) const {
    check_subset_id(s);
    return adj_[s];
}

bool Instance::has_edge(SubsetId a, SubsetId b) const {
    check_subset_id(a);
    check_subset_id(b);
    if (a == b) return false;
    const auto& na = adj_[a];
    return std::binary_search(na.begin(), na.end(), b);
}

Bitset Instance::universe() const {
    Bitset u(n_);
    for (int e = 0; e < n_; ++e) u.set(e);
    return u;
}

void Instance::check_subset_id(SubsetId s) const {
    if (s < 0 || s >= m())
        throw std::out_of_range("unknown subset id " + std::to_string(s));
}

void Instance::check_element_id(ElementId e) const {
    if (e < 0 || e >= n_)
        throw std::out_of_range("unknown element id " + std::to_string(e));
}

namespace {

// Connectivity of the subgraph induced by `in_set`; starts from `start`.
bool induced_component_covers(const Instance& inst, const Bitset& in_set, SubsetId start) {
    Bitset seen(inst.m());
    std::vector<SubsetId> stack{start};
    seen.set(start);
    int reached = 0;
    while (!stack.empty()) {
        SubsetId u = stack.back();
        stack.pop_back();
        ++reached;
        for (SubsetId v : inst.adj(u))
            if (in_set.test(v) && !seen.test(v)) {
                seen.set(v);
                stack.push_back(v);
            }
    }
    return reached == in_set.count();
}

}  // namespace

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport rep;

    Bitset covered(inst.n());
    for (SubsetId s = 0; s < inst.m(); ++s) covered |= inst.subset(s);
    rep.feasible_cover = covered == inst.universe();
    if (!rep.feasible_cover) {
        auto missing = inst.universe().minus(covered).to_vector();
        std::string msg = "uncoverable elements:";
        for (int e : missing) msg += " " + std::to_string(e);
        rep.issues.push_back(msg);
    }

    if (inst.m() == 0) {
        rep.graph_connected = false;
        rep.issues.push_back("auxiliary graph has no vertices");
    } else {
        Bitset all(inst.m());
        for (SubsetId s = 0; s < inst.m(); ++s) all.set(s);
        rep.graph_connected = induced_component_covers(inst, all, 0);
        if (!rep.graph_connected) rep.issues.push_back("auxiliary graph is disconnected");
    }
    return rep;
}

Bitset coverage_union(const Instance& inst, const std::vector<SubsetId>& ids) {
    Bitset u(inst.n());
    for (SubsetId s : ids) u |= inst.subset(s);
    return u;
}

Solution check_solution(const Instance& inst, const std::vector<SubsetId>& ids) {
    Solution sol;
    Bitset in_set(inst.m());
    for (SubsetId s : ids) {
        inst.check_subset_id(s);
        in_set.set(s);
    }
    sol.chosen = in_set.to_vector();
    sol.covers_universe = coverage_union(inst, sol.chosen) == inst.universe();
    sol.induces_connected =
        !sol.chosen.empty() && induced_component_covers(inst, in_set, sol.chosen.front());
    return sol;
}

}  // namespace mcsc
