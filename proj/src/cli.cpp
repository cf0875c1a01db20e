#include "mcsc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include "mcsc/analysis.hpp"
#include "mcsc/bench.hpp"
#include "mcsc/greedy.hpp"
#include "mcsc/io.hpp"

namespace mcsc {

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// Inputs are file paths, "-" for stdin, or "builtin:<name>" fixtures.
Fixture load_fixture_or_file(const std::string& input, bool expect_cds) {
    constexpr std::string_view prefix = "builtin:";
    if (input.starts_with(prefix)) return builtin_fixture(input.substr(prefix.size()));
    std::string text = slurp(input);
    if (expect_cds) return parse_cds_graph(text);
    return parse_instance(text);
}

Instance load_instance(const std::string& input) {
    Fixture f = load_fixture_or_file(input, /*expect_cds=*/false);
    if (auto* inst = std::get_if<Instance>(&f)) return *inst;
    throw std::invalid_argument("input '" + input +
                                "' is a CDS graph; reduce it first (reduce-cds)");
}

CdsGraph load_cds_graph(const std::string& input) {
    Fixture f = load_fixture_or_file(input, /*expect_cds=*/true);
    if (auto* h = std::get_if<CdsGraph>(&f)) return *h;
    throw std::invalid_argument("input '" + input + "' is an instance, not a CDS graph");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + out_path + "'");
    out << text;
}

std::string join_ids(const std::vector<int>& ids, char sep = ',') {
    std::string s;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(ids[i]);
    }
    return s;
}

void print_trace(const GreedyTrace& trace) {
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const GreedyStep& step = trace.steps[i];
        std::cout << "step=" << i;
        switch (step.kind) {
            case StepKind::Initial:
                std::cout << " kind=initial subset=" << step.subset;
                break;
            case StepKind::Path:
                std::cout << " kind=path target=" << step.path->target
                          << " vertices=" << join_ids(step.path->vertices);
                break;
            case StepKind::Relay:
                std::cout << " kind=relay subset=" << step.subset;
                break;
        }
        std::cout << " covered=" << join_ids(step.newly_covered);
        if (step.charge)
            std::cout << " charge=" << step.charge->num << "/" << step.charge->den;
        std::cout << '\n';
    }
}

int run_solve(const std::string& input, const std::string& alg, bool trace) {
    Instance inst = load_instance(input);
    if (alg == "modified") {
        GreedyResult result = modified_greedy(inst);
        if (trace) print_trace(result.trace);
        std::cout << "size=" << result.solution.size() << " relays=" << result.trace.relay_count
                  << '\n';
        std::cout << write_solution(result.solution.chosen);
        return 0;
    }
    if (alg == "original") {
        OriginalGreedyResult result = original_greedy(inst);
        if (auto* dead = std::get_if<Deadlock>(&result)) {
            std::cout << "DEADLOCK\n";
            std::cout << "partial " << dead->partial.size() << '\n';
            if (!dead->partial.empty()) std::cout << join_ids(dead->partial, ' ') << '\n';
            return 0;
        }
        const Solution& sol = std::get<Solution>(result);
        std::cout << "size=" << sol.size() << '\n';
        std::cout << write_solution(sol.chosen);
        return 0;
    }
    Solution sol = classic_greedy_set_cover(inst);
    std::cout << "size=" << sol.size() << " induces_connected=" << (sol.induces_connected ? "true" : "false")
              << '\n';
    std::cout << write_solution(sol.chosen);
    return 0;
}

int run_exact(const std::string& input, const std::string& problem, const OracleLimits& limits) {
    if (problem == "cds") {
        CdsGraph h = load_cds_graph(input);
        auto cds = min_cds(h, limits);
        std::cout << write_solution(cds);
        return 0;
    }
    Instance inst = load_instance(input);
    Solution sol = problem == "setcover" ? min_set_cover(inst, limits) : min_csc(inst, limits);
    std::cout << "size=" << sol.size() << '\n';
    std::cout << write_solution(sol.chosen);
    return 0;
}

int run_check(const std::string& input, const std::string& solution_path) {
    Instance inst = load_instance(input);
    auto ids = parse_solution(slurp(solution_path));
    Solution sol = check_solution(inst, ids);
    std::cout << "covers_universe=" << (sol.covers_universe ? "true" : "false") << '\n';
    std::cout << "induces_connected=" << (sol.induces_connected ? "true" : "false") << '\n';
    std::cout << "valid_csc=" << (sol.valid_csc() ? "true" : "false") << '\n';
    return sol.valid_csc() ? 0 : 1;
}

int run_bound(const std::string& input, bool with_oracles, const OracleLimits& limits) {
    Instance inst = load_instance(input);
    BoundReport rep = build_report(inst, with_oracles, limits);
    std::cout << "gamma=" << rep.gamma << '\n';
    std::cout << "d_c=" << rep.d_c << '\n';
    std::cout << "corrected_bound=" << rep.corrected_bound.str() << '\n';
    std::cout << "original_claimed_bound=" << rep.original_claimed_bound.str() << '\n';
    std::cout << "greedy_size=" << rep.greedy_size << '\n';
    std::cout << "relay_count=" << rep.relay_count << '\n';
    if (rep.sc_opt_size) std::cout << "sc_opt_size=" << *rep.sc_opt_size << '\n';
    if (rep.mcsc_opt_size) std::cout << "mcsc_opt_size=" << *rep.mcsc_opt_size << '\n';
    if (rep.ratio_vs_sc_opt) std::cout << "ratio_vs_sc_opt=" << rep.ratio_vs_sc_opt->str() << '\n';
    if (rep.bound_satisfied)
        std::cout << "bound_satisfied=" << (*rep.bound_satisfied ? "true" : "false") << '\n';
    return 0;
}

int run_validate_and_report(const Instance& inst) {
    ValidationReport rep = validate_instance(inst);
    std::cout << "feasible_cover=" << (rep.feasible_cover ? "true" : "false") << '\n';
    std::cout << "graph_connected=" << (rep.graph_connected ? "true" : "false") << '\n';
    for (const auto& issue : rep.issues) std::cout << "issue=" << issue << '\n';
    return rep.ok() ? 0 : 1;
}

int run_demo_deadlock() {
    Instance inst = std::get<Instance>(builtin_fixture("paper-counterexample"));
    std::cout << "instance=paper-counterexample\n";
    std::cout << write_instance(inst);
    std::cout << "--\n";
    OriginalGreedyResult original = original_greedy(inst);
    if (auto* dead = std::get_if<Deadlock>(&original)) {
        std::cout << "original=DEADLOCK partial=" << join_ids(dead->partial) << '\n';
    } else {
        std::cout << "original=ok size=" << std::get<Solution>(original).size() << '\n';
    }
    GreedyResult modified = modified_greedy(inst);
    std::cout << "modified=ok size=" << modified.solution.size()
              << " chosen=" << join_ids(modified.solution.chosen) << '\n';
    return 0;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"minimum connected set cover toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    GenConfig gen_cfg;
    std::string gen_graph = "gnp";
    std::string gen_out;
    std::string gen_builtin;
    gen->add_option("--n", gen_cfg.n_elements, "universe size");
    gen->add_option("--m", gen_cfg.m_subsets, "subset count");
    gen->add_option("--prob", gen_cfg.element_prob, "element membership probability")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--graph", gen_graph, "graph kind: complete|path|cycle|gnp")
        ->check(CLI::IsMember({"complete", "path", "cycle", "gnp"}));
    gen->add_option("--gnp-q", gen_cfg.gnp_q, "edge probability for gnp")
        ->check(CLI::Range(0.0, 1.0));
    gen->add_option("--seed", gen_cfg.seed, "generator seed");
    bool gen_no_feasible = false;
    gen->add_flag("--no-ensure-feasible", gen_no_feasible, "skip feasibility patching");
    gen->add_option("-o,--out", gen_out, "output file (default stdout)");
    gen->add_option("--builtin", gen_builtin, "emit a built-in fixture instead");

    // solve
    auto* solve = app.add_subcommand("solve", "run a greedy solver");
    std::string solve_alg = "modified";
    std::string solve_input;
    bool solve_trace = false;
    solve->add_option("--alg", solve_alg, "modified|original|classic")
        ->check(CLI::IsMember({"modified", "original", "classic"}));
    solve->add_option("-i,--input", solve_input, "instance file, '-', or builtin:<name>")
        ->required();
    solve->add_flag("--trace", solve_trace, "print greedy steps");

    // exact
    auto* exact = app.add_subcommand("exact", "run a brute-force oracle");
    std::string exact_problem = "mcsc";
    std::string exact_input;
    OracleLimits exact_limits;
    exact->add_option("--problem", exact_problem, "setcover|mcsc|cds")
        ->check(CLI::IsMember({"setcover", "mcsc", "cds"}));
    exact->add_option("-i,--input", exact_input, "input file, '-', or builtin:<name>")->required();
    exact->add_option("--max-subsets", exact_limits.max_subsets, "subset cap");
    exact->add_option("--max-vertices", exact_limits.max_vertices, "vertex cap");

    // check
    auto* check = app.add_subcommand("check", "validate an instance or a solution against it");
    std::string check_input;
    std::string check_solution_path;
    check->add_option("-i,--input", check_input, "instance file, '-', or builtin:<name>")
        ->required();
    check->add_option("-s,--solution", check_solution_path, "solution file to check");

    // bound
    auto* bound = app.add_subcommand("bound", "report the approximation-ratio quantities");
    std::string bound_input;
    bool bound_no_exact = false;
    OracleLimits bound_limits;
    bound->add_option("-i,--input", bound_input, "instance file, '-', or builtin:<name>")
        ->required();
    bound->add_flag("--no-exact", bound_no_exact, "skip the brute-force oracles");
    bound->add_option("--max-subsets", bound_limits.max_subsets, "oracle subset cap");

    // reduce-cds
    auto* reduce = app.add_subcommand("reduce-cds", "reduce a CDS problem to an instance");
    std::string reduce_input;
    std::string reduce_out;
    reduce->add_option("-i,--input", reduce_input, "CDS graph file, '-', or builtin:<name>")
        ->required();
    reduce->add_option("-o,--out", reduce_out, "output file (default stdout)");

    // bench
    auto* bench = app.add_subcommand("bench", "seeded solver corpus with bound auditing");
    BenchConfig bench_cfg;
    bench->add_option("--instances", bench_cfg.instances, "number of instances");
    bench->add_option("--seed", bench_cfg.seed, "corpus seed");
    bench->add_option("--max-n", bench_cfg.max_n, "max universe size");
    bench->add_option("--max-m", bench_cfg.max_m, "max subset count");

    // demo-deadlock
    app.add_subcommand("demo-deadlock", "show the deadlock of the cover-adjacent-only greedy");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            if (!gen_builtin.empty()) {
                Fixture f = builtin_fixture(gen_builtin);
                if (auto* inst = std::get_if<Instance>(&f))
                    emit(write_instance(*inst), gen_out);
                else
                    emit(write_cds_graph(std::get<CdsGraph>(f)), gen_out);
                return 0;
            }
            gen_cfg.ensure_feasible = !gen_no_feasible;
            if (gen_graph == "complete") gen_cfg.graph_kind = GraphKind::Complete;
            else if (gen_graph == "path") gen_cfg.graph_kind = GraphKind::Path;
            else if (gen_graph == "cycle") gen_cfg.graph_kind = GraphKind::Cycle;
            else if (gen_graph == "gnp") gen_cfg.graph_kind = GraphKind::Gnp;
            else throw std::invalid_argument("unknown graph kind '" + gen_graph + "'");
            emit(write_instance(gen_random(gen_cfg)), gen_out);
            return 0;
        }
        if (solve->parsed()) return run_solve(solve_input, solve_alg, solve_trace);
        if (exact->parsed()) return run_exact(exact_input, exact_problem, exact_limits);
        if (check->parsed()) {
            if (check_solution_path.empty())
                return run_validate_and_report(load_instance(check_input));
            return run_check(check_input, check_solution_path);
        }
        if (bound->parsed()) return run_bound(bound_input, !bound_no_exact, bound_limits);
        if (reduce->parsed()) {
            emit(write_instance(reduce_cds(load_cds_graph(reduce_input))), reduce_out);
            return 0;
        }
        if (bench->parsed()) {
            std::cout << run_bench(bench_cfg);
            return 0;
        }
        return run_demo_deadlock();
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace mcsc
