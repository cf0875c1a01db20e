#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcsc/cli.hpp"

using namespace mcsc;

namespace {

struct CliRun {
    int exit_code;
    std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::vector<const char*> argv{"mcsc"};
    for (const auto& a : args) argv.push_back(a.c_str());

    std::ostringstream captured;
    std::streambuf* old_out = std::cout.rdbuf(captured.rdbuf());
    std::ostringstream sink;
    std::streambuf* old_err = std::cerr.rdbuf(sink.rdbuf());
    int code = cli_main(static_cast<int>(argv.size()), argv.data());
    std::cout.rdbuf(old_out);
    std::cerr.rdbuf(old_err);
    return CliRun{code, captured.str()};
}

}  // namespace

TEST_CASE("solve reports the deadlock as a normal outcome") {
    CliRun run = run_cli({"solve", "--alg", "original", "-i", "builtin:paper-counterexample"});
    CHECK(run.exit_code == 0);
    CHECK(run.out == "DEADLOCK\npartial 2\n0 3\n");
}

TEST_CASE("solve prints the modified greedy solution") {
    CliRun run = run_cli({"solve", "--alg", "modified", "-i", "builtin:paper-counterexample"});
    CHECK(run.exit_code == 0);
    CHECK(run.out == "size=3 relays=0\nsolution 3\n0 3 4\n");
}

TEST_CASE("bound prints exact rationals") {
    CliRun run = run_cli({"bound", "-i", "builtin:paper-counterexample"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("gamma=2\n") != std::string::npos);
    CHECK(run.out.find("d_c=1\n") != std::string::npos);
    CHECK(run.out.find("corrected_bound=2\n") != std::string::npos);
    CHECK(run.out.find("ratio_vs_sc_opt=1\n") != std::string::npos);
    CHECK(run.out.find("bound_satisfied=true\n") != std::string::npos);
    CHECK(run.out.find('.') == std::string::npos);  // never floats
}

TEST_CASE("exit codes distinguish usage errors from negative results") {
    CHECK(run_cli({"frobnicate"}).exit_code == 2);
    CHECK(run_cli({"solve"}).exit_code == 2);  // missing required input
    CHECK(run_cli({"solve", "-i", "builtin:unknown-name"}).exit_code == 1);
    CHECK(run_cli({"solve", "--alg", "nope", "-i", "builtin:relay-path"}).exit_code == 2);
    CHECK(run_cli({"--help"}).exit_code == 0);
}

TEST_CASE("gen emits canonical fixture text") {
    CliRun run = run_cli({"gen", "--builtin", "figure1-cds"});
    CHECK(run.exit_code == 0);
    CHECK(run.out.substr(0, 8) == "cds 8 9\n");
}

TEST_CASE("gen is deterministic per seed") {
    std::vector<std::string> args{"gen", "--n", "7", "--m", "5", "--seed", "3", "--graph", "gnp"};
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.substr(0, 9) == "mcsc 7 5 ");
}

TEST_CASE("identical bench invocations are byte-identical") {
    std::vector<std::string> args{"bench", "--instances", "15", "--seed", "5"};
    CliRun a = run_cli(args);
    CliRun b = run_cli(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("deadlock_rate=") != std::string::npos);
}
