#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsc/core.hpp"
#include "mcsc/io.hpp"
#include "test_support.hpp"

using namespace mcsc;
using namespace mcsc::testing;

TEST_CASE("instance construction validates structure") {
    CHECK_THROWS_AS(Instance(2, {{0, 2}}, {}), std::invalid_argument);   // element out of range
    CHECK_THROWS_AS(Instance(2, {{0}, {1}}, {{0, 2}}), std::invalid_argument);  // edge endpoint
    CHECK_THROWS_AS(Instance(2, {{0}, {1}}, {{1, 1}}), std::invalid_argument);  // self-loop
    CHECK_THROWS_AS(Instance(2, {{0}, {1}}, {{0, 1}, {1, 0}}), std::invalid_argument);  // dup edge

    Instance inst(3, {{0, 1}, {}, {2}}, {{0, 1}, {1, 2}});
    CHECK(inst.n() == 3);
    CHECK(inst.m() == 3);
    CHECK(inst.subset_size(1) == 0);  // empty subsets are allowed
    CHECK(inst.has_edge(1, 0));
    CHECK_FALSE(inst.has_edge(0, 2));
}

TEST_CASE("bitset guards its capacity") {
    Bitset a(10, {1, 9});
    CHECK(a.count() == 2);
    CHECK_THROWS_AS(a.set(10), std::out_of_range);
    CHECK_THROWS_AS((void)a.test(-1), std::out_of_range);
    Bitset b(11);
    CHECK_THROWS_AS(a |= b, std::invalid_argument);
    CHECK_THROWS_AS((void)a.intersects(b), std::invalid_argument);
}

TEST_CASE("validate_instance") {
    SUBCASE("paper counterexample is feasible") {
        auto rep = validate_instance(counterexample());
        CHECK(rep.feasible_cover);
        CHECK(rep.graph_connected);
        CHECK(rep.issues.empty());
    }
    SUBCASE("uncoverable element") {
        Instance inst(2, {{0}}, {});
        auto rep = validate_instance(inst);
        CHECK_FALSE(rep.feasible_cover);
        CHECK(rep.graph_connected);  // single vertex
        REQUIRE(rep.issues.size() == 1);
    }
    SUBCASE("disconnected auxiliary graph") {
        Instance inst(2, {{0}, {1}}, {});
        auto rep = validate_instance(inst);
        CHECK(rep.feasible_cover);
        CHECK_FALSE(rep.graph_connected);
    }
}

TEST_CASE("coverage_union") {
    Instance inst = counterexample();
    CHECK(coverage_union(inst, {}).none());
    CHECK(coverage_union(inst, {0, 3}).to_vector() == std::vector<int>{0, 1, 2});
    CHECK(coverage_union(inst, {0, 1, 2, 3, 4}) == inst.universe());
    CHECK_THROWS_AS(coverage_union(inst, {7}), std::out_of_range);
}

TEST_CASE("check_solution") {
    Instance inst = counterexample();
    SUBCASE("valid csc on complete graph") {
        Solution sol = check_solution(inst, {0, 3, 4});
        CHECK(sol.covers_universe);
        CHECK(sol.induces_connected);
        CHECK(sol.valid_csc());
    }
    SUBCASE("singleton is connected but does not cover") {
        Solution sol = check_solution(inst, {0});
        CHECK_FALSE(sol.covers_universe);
        CHECK(sol.induces_connected);
    }
    SUBCASE("empty set is not connected") {
        Solution sol = check_solution(inst, {});
        CHECK_FALSE(sol.induces_connected);
    }
    SUBCASE("path endpoints are disconnected") {
        Instance path(3, {{0}, {1}, {2}}, path_edges(3));
        CHECK_FALSE(check_solution(path, {0, 2}).induces_connected);
        CHECK(check_solution(path, {0, 1, 2}).induces_connected);
    }
    SUBCASE("unknown id") {
        CHECK_THROWS_AS(check_solution(inst, {5}), std::out_of_range);
    }
    SUBCASE("duplicate ids collapse") {
        Solution sol = check_solution(inst, {0, 0, 3, 3, 4});
        CHECK(sol.chosen == std::vector<int>{0, 3, 4});
    }
}

TEST_CASE("coverage flag agrees with coverage_union on random instances") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        GenConfig cfg;
        cfg.n_elements = 1 + rand_index(rng, 10);
        cfg.m_subsets = 1 + rand_index(rng, 8);
        cfg.element_prob = rand_prob(rng);
        cfg.seed = rand_u64(rng);
        cfg.ensure_feasible = false;
        Instance inst = gen_random(cfg);

        std::vector<int> ids;
        for (int s = 0; s < inst.m(); ++s)
            if (rand_index(rng, 2) == 0) ids.push_back(s);
        Solution sol = check_solution(inst, ids);
        CHECK(sol.covers_universe == (coverage_union(inst, ids) == inst.universe()));
        CHECK(check_solution(inst, ids) == sol);  // pure
    }
}

TEST_CASE("full family of a feasible instance is a valid csc") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        GenConfig cfg;
        cfg.n_elements = 1 + rand_index(rng, 10);
        cfg.m_subsets = 1 + rand_index(rng, 8);
        cfg.element_prob = 0.4;
        cfg.seed = rand_u64(rng);
        Instance inst = gen_random(cfg);
        std::vector<int> all(inst.m());
        for (int s = 0; s < inst.m(); ++s) all[s] = s;
        CHECK(check_solution(inst, all).valid_csc());
    }
}
