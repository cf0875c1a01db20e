#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsc/analysis.hpp"
#include "mcsc/cds_graph.hpp"
#include "mcsc/exact.hpp"
#include "mcsc/graph_ops.hpp"
#include "mcsc/greedy.hpp"
#include "mcsc/io.hpp"
#include "test_support.hpp"

using namespace mcsc;
using namespace mcsc::testing;

TEST_CASE("reduce_cds builds closed neighborhoods over the same graph") {
    SUBCASE("figure-1 graph") {
        CdsGraph h = figure1();
        Instance inst = reduce_cds(h);
        REQUIRE(inst.n() == 8);
        REQUIRE(inst.m() == 8);
        CHECK(inst.subset(0).to_vector() == std::vector<int>{0, 1, 3});
        CHECK(inst.subset(1).to_vector() == std::vector<int>{0, 1, 2});
        CHECK(inst.subset(2).to_vector() == std::vector<int>{1, 2, 3, 4, 5, 6});
        CHECK(inst.subset(3).to_vector() == std::vector<int>{0, 2, 3, 6});
        CHECK(inst.subset(4).to_vector() == std::vector<int>{2, 4, 7});
        CHECK(inst.subset(5).to_vector() == std::vector<int>{2, 5});
        CHECK(inst.subset(6).to_vector() == std::vector<int>{2, 3, 6});
        CHECK(inst.subset(7).to_vector() == std::vector<int>{4, 7});
        CHECK(inst.edges() == h.edges());
    }
    SUBCASE("triangle gives three full subsets") {
        CdsGraph tri(3, {{0, 1}, {0, 2}, {1, 2}});
        Instance inst = reduce_cds(tri);
        for (int v = 0; v < 3; ++v)
            CHECK(inst.subset(v).to_vector() == std::vector<int>{0, 1, 2});
    }
    SUBCASE("two-vertex path") {
        CdsGraph p2(2, {{0, 1}});
        Instance inst = reduce_cds(p2);
        CHECK(inst.subset(0).to_vector() == std::vector<int>{0, 1});
        CHECK(inst.subset(1).to_vector() == std::vector<int>{0, 1});
        CHECK(inst.edges().size() == 1);
    }
    SUBCASE("preconditions") {
        CHECK_THROWS_AS(reduce_cds(CdsGraph(1, {})), std::invalid_argument);
        CHECK_THROWS_AS(reduce_cds(CdsGraph(3, {{0, 1}})), std::invalid_argument);
    }
}

TEST_CASE("lift_solution is the identity on ids") {
    Solution sol;
    sol.chosen = {2, 4};
    CHECK(lift_solution(sol) == std::vector<int>{2, 4});
    CHECK(lift_solution(Solution{}).empty());
}

TEST_CASE("figure-1 reduction round trip through the oracles") {
    CdsGraph h = figure1();
    Instance inst = reduce_cds(h);

    Solution mcsc_opt = min_csc(inst);
    auto cds_opt = min_cds(h);
    CHECK(mcsc_opt.size() == 3);
    CHECK(cds_opt.size() == 3);

    // the lifted MCSC witness is itself a connected dominating set
    auto lifted = lift_solution(mcsc_opt);
    Bitset dom(h.vertex_count());
    for (int v : lifted) {
        dom.set(v);
        for (int u : h.adj(v)) dom.set(u);
    }
    CHECK(dom.count() == h.vertex_count());
    CHECK(induced_connected(inst, lifted));  // G == H by construction

    CHECK(cover_diameter(inst) == 2);
}

TEST_CASE("reduction equivalences on random connected graphs") {
    std::mt19937_64 rng(59);
    for (int iter = 0; iter < 60; ++iter) {
        int nv = 2 + rand_index(rng, 7);
        CdsGraph h = random_connected_graph(rng, nv, 0.2 + 0.5 * rand_prob(rng));
        Instance inst = reduce_cds(h);

        CHECK(min_csc(inst).size() == static_cast<int>(min_cds(h).size()));

        int d_c = cover_diameter(inst);
        CHECK(d_c >= 1);
        CHECK(d_c <= 2);

        // domination <=> coverage for a random vertex set
        std::vector<int> d_set;
        for (int v = 0; v < nv; ++v)
            if (rand_index(rng, 2) == 0) d_set.push_back(v);
        Bitset dom(nv);
        for (int v : d_set) {
            dom.set(v);
            for (int u : h.adj(v)) dom.set(u);
        }
        bool dominates = dom.count() == nv;
        bool covers = coverage_union(inst, d_set) == inst.universe();
        CHECK(dominates == covers);

        // connectivity agrees across the reduction (G == H)
        bool connected_in_h = false;
        if (!d_set.empty()) {
            Bitset in_set = Bitset::from(nv, d_set);
            Bitset seen(nv);
            std::vector<int> stack{d_set.front()};
            seen.set(d_set.front());
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
            connected_in_h = reached == static_cast<int>(d_set.size());
        }
        CHECK(connected_in_h == induced_connected(inst, d_set));
    }
}

TEST_CASE("complete graphs reduce with cover diameter 1") {
    CdsGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(cover_diameter(reduce_cds(k4)) == 1);
}

TEST_CASE("greedy on reductions obeys the specialized bound when no relay occurs") {
    std::mt19937_64 rng(61);
    for (int iter = 0; iter < 40; ++iter) {
        int nv = 2 + rand_index(rng, 8);
        CdsGraph h = random_connected_graph(rng, nv, 0.2 + 0.4 * rand_prob(rng));
        Instance inst = reduce_cds(h);

        GreedyResult greedy = modified_greedy(inst);
        if (greedy.trace.relay_count > 0 || cover_diameter(inst) != 2) continue;

        int gamma = 0;
        for (int s = 0; s < inst.m(); ++s) gamma = std::max(gamma, inst.subset_size(s));
        Rational bound = Rational(2) * (Rational(1) + harmonic(gamma - 1));
        Rational lhs(greedy.solution.size());
        Rational rhs = bound * Rational(static_cast<int>(min_cds(h).size()));
        CHECK(lhs <= rhs);
    }
}
