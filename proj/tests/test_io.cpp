#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcsc/bench.hpp"
#include "mcsc/graph_ops.hpp"
#include "mcsc/io.hpp"
#include "test_support.hpp"

using namespace mcsc;
using namespace mcsc::testing;

namespace {

const char* kCounterexampleText =
    "mcsc 4 5 10\n"
    "s 0 2 0 1\n"
    "s 1 1 0\n"
    "s 2 1 1\n"
    "s 3 2 1 2\n"
    "s 4 1 3\n"
    "e 0 1\n"
    "e 0 2\n"
    "e 0 3\n"
    "e 0 4\n"
    "e 1 2\n"
    "e 1 3\n"
    "e 1 4\n"
    "e 2 3\n"
    "e 2 4\n"
    "e 3 4\n";

}  // namespace

TEST_CASE("parse_instance accepts the canonical counterexample file") {
    Instance inst = parse_instance(kCounterexampleText);
    CHECK(inst == counterexample());
}

TEST_CASE("write_instance emits the golden fixture text byte for byte") {
    CHECK(write_instance(counterexample()) == kCounterexampleText);

    Instance fig1 = reduce_cds(figure1());
    CHECK(write_instance(fig1) ==
          "mcsc 8 8 9\n"
          "s 0 3 0 1 3\n"
          "s 1 3 0 1 2\n"
          "s 2 6 1 2 3 4 5 6\n"
          "s 3 4 0 2 3 6\n"
          "s 4 3 2 4 7\n"
          "s 5 2 2 5\n"
          "s 6 3 2 3 6\n"
          "s 7 2 4 7\n"
          "e 0 1\n"
          "e 0 3\n"
          "e 1 2\n"
          "e 2 3\n"
          "e 2 4\n"
          "e 2 5\n"
          "e 2 6\n"
          "e 3 6\n"
          "e 4 7\n");
}

TEST_CASE("parse_instance smallest form and comments") {
    Instance tiny = parse_instance("mcsc 1 1 0\ns 0 1 0\n");
    CHECK(tiny.n() == 1);
    CHECK(tiny.m() == 1);
    CHECK(tiny.subset(0).to_vector() == std::vector<int>{0});

    Instance commented = parse_instance("# header\nmcsc 2 2 1 # inline\ns 0 1 0\ns 1 1 1\ne 0 1\n");
    CHECK(commented.m() == 2);
    CHECK(commented.has_edge(0, 1));
}

TEST_CASE("parse_instance reports errors with line numbers") {
    auto line_of = [](const auto& fn) {
        try {
            fn();
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };

    CHECK(line_of([] { parse_instance(""); }) == 1);
    CHECK(line_of([] { parse_instance("mcsc 2 3\n"); }) == 1);  // malformed header
    CHECK(line_of([] { parse_instance("mcsc 2 3 1\ns 0 1 0\ns 1 1 1\ns 2 0\ne 0 5\n"); }) == 5);
    CHECK(line_of([] { parse_instance("mcsc 2 2 1\ns 0 1 0\ns 1 1 5\ne 0 1\n"); }) == 3);
    CHECK(line_of([] { parse_instance("mcsc 2 2 2\ns 0 1 0\ns 1 1 1\ne 0 1\ne 1 0\n"); }) == 5);
    CHECK(line_of([] { parse_instance("mcsc 2 2 1\ns 0 1 0\ns 1 1 1\ne 1 1\n"); }) == 4);
    CHECK(line_of([] { parse_instance("mcsc 2 2 1\ns 0 1 0\ns 0 1 1\ne 0 1\n"); }) == 3);
}

TEST_CASE("round trip is the identity on random instances") {
    std::mt19937_64 rng(73);
    for (int iter = 0; iter < 100; ++iter) {
        GenConfig cfg;
        cfg.n_elements = 1 + rand_index(rng, 12);
        cfg.m_subsets = 1 + rand_index(rng, 10);
        cfg.element_prob = rand_prob(rng);
        cfg.graph_kind = static_cast<GraphKind>(rand_index(rng, 4));
        cfg.gnp_q = rand_prob(rng);
        cfg.seed = rand_u64(rng);
        cfg.ensure_feasible = rand_index(rng, 2) == 0;
        Instance inst = gen_random(cfg);
        Instance back = parse_instance(write_instance(inst));
        CHECK(back == inst);
        CHECK(write_instance(back) == write_instance(inst));
    }
}

TEST_CASE("cds graph format") {
    CdsGraph h = figure1();
    std::string text = write_cds_graph(h);
    CHECK(text ==
          "cds 8 9\n"
          "e 0 1\n"
          "e 0 3\n"
          "e 1 2\n"
          "e 2 3\n"
          "e 2 4\n"
          "e 2 5\n"
          "e 2 6\n"
          "e 3 6\n"
          "e 4 7\n");
    CHECK(parse_cds_graph(text) == h);
    CHECK_THROWS_AS(parse_cds_graph("cds 2 1\ne 0 2\n"), ParseError);
}

TEST_CASE("solution format") {
    CHECK(write_solution({3, 0, 4}) == "solution 3\n0 3 4\n");
    CHECK(write_solution({}) == "solution 0\n");
    CHECK(parse_solution("solution 3\n0 3 4\n") == std::vector<int>{0, 3, 4});
    CHECK(parse_solution("solution 0\n").empty());
    CHECK_THROWS_AS(parse_solution("solution 2\n1\n"), ParseError);
    CHECK_THROWS_AS(parse_solution("nonsense\n"), ParseError);
}

TEST_CASE("gen_random is deterministic and honors the graph kind") {
    GenConfig cfg;
    cfg.n_elements = 9;
    cfg.m_subsets = 6;
    cfg.element_prob = 0.35;
    cfg.graph_kind = GraphKind::Gnp;
    cfg.gnp_q = 0.4;
    cfg.seed = 0xfeedbeef;
    Instance a = gen_random(cfg);
    Instance b = gen_random(cfg);
    CHECK(a == b);

    cfg.graph_kind = GraphKind::Complete;
    Instance complete = gen_random(cfg);
    CHECK(static_cast<int>(complete.edges().size()) == 6 * 5 / 2);

    cfg.graph_kind = GraphKind::Path;
    cfg.ensure_feasible = false;
    Instance path = gen_random(cfg);
    CHECK(path.edges() == path_edges(6));

    cfg.graph_kind = GraphKind::Cycle;
    Instance cycle = gen_random(cfg);
    CHECK(cycle.edges().size() == 6);
}

TEST_CASE("ensure_feasible patches coverage and connectivity") {
    std::mt19937_64 rng(79);
    for (int iter = 0; iter < 200; ++iter) {
        GenConfig cfg;
        cfg.n_elements = 1 + rand_index(rng, 12);
        cfg.m_subsets = 1 + rand_index(rng, 9);
        cfg.element_prob = 0.5 * rand_prob(rng);  // sparse: patching must kick in
        cfg.graph_kind = GraphKind::Gnp;
        cfg.gnp_q = 0.3 * rand_prob(rng);
        cfg.seed = rand_u64(rng);
        Instance inst = gen_random(cfg);
        auto rep = validate_instance(inst);
        CHECK(rep.feasible_cover);
        CHECK(rep.graph_connected);
    }
}

TEST_CASE("builtin fixtures") {
    Instance counter = counterexample();
    CHECK(counter.n() == 4);
    CHECK(counter.m() == 5);
    CHECK(counter.edges().size() == 10);

    CdsGraph fig1 = figure1();
    CHECK(fig1.vertex_count() == 8);
    CHECK(fig1.edges().size() == 9);

    Instance relay = relay_path();
    CHECK(relay.n() == 3);
    CHECK(relay.m() == 3);
    CHECK(relay.edges() == path_edges(3));

    CHECK_THROWS_AS(builtin_fixture("no-such-fixture"), std::invalid_argument);
}

TEST_CASE("bench output is a pure function of its config") {
    BenchConfig cfg;
    cfg.instances = 25;
    cfg.seed = 99;
    std::string first = run_bench(cfg);
    std::string second = run_bench(cfg);
    CHECK(first == second);
    CHECK(first.find("max_ratio=") != std::string::npos);
    CHECK(first.find("violations_no_relay=") != std::string::npos);
    CHECK(first.find("deadlock_rate=") != std::string::npos);

    cfg.seed = 100;
    CHECK(run_bench(cfg) != first);
}
