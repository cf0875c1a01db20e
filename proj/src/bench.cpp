#include "mcsc/bench.hpp"

#include <sstream>

#include "mcsc/analysis.hpp"
#include "mcsc/greedy.hpp"
#include "mcsc/io.hpp"

namespace mcsc {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic per-instance shape drawn from the bench seed and index.
GenConfig instance_config(const BenchConfig& bench, int index) {
    std::uint64_t sub_seed = splitmix64(bench.seed ^ (0x100000001b3ULL * (index + 1)));
    std::mt19937_64 shape_rng(sub_seed);

    GenConfig cfg;
    cfg.n_elements = 2 + rand_index(shape_rng, bench.max_n - 1);
    cfg.m_subsets = 1 + rand_index(shape_rng, bench.max_m);
    const double probs[] = {0.15, 0.3, 0.5, 0.7};
    cfg.element_prob = probs[rand_index(shape_rng, 4)];
    switch (rand_index(shape_rng, 5)) {
        case 0: cfg.graph_kind = GraphKind::Complete; break;
        case 1: cfg.graph_kind = GraphKind::Path; break;
        case 2: cfg.graph_kind = GraphKind::Cycle; break;
        case 3: cfg.graph_kind = GraphKind::Gnp; cfg.gnp_q = 0.3; break;
        default: cfg.graph_kind = GraphKind::Gnp; cfg.gnp_q = 0.6; break;
    }
    cfg.seed = rand_u64(shape_rng);
    cfg.ensure_feasible = true;
    return cfg;
}

}  // namespace

std::string run_bench(const BenchConfig& cfg) {
    if (cfg.instances < 0 || cfg.max_n < 2 || cfg.max_m < 1)
        throw std::invalid_argument("run_bench: need instances >= 0, max_n >= 2, max_m >= 1");
    std::ostringstream out;
    Rational max_ratio;
    int violations_no_relay = 0;
    int violations_relay = 0;
    int relay_runs = 0;
    int deadlocks = 0;

    for (int i = 0; i < cfg.instances; ++i) {
        Instance inst = gen_random(instance_config(cfg, i));
        BoundReport rep = build_report(inst, /*run_oracles=*/true, cfg.limits);
        bool deadlocked = std::holds_alternative<Deadlock>(original_greedy(inst));

        if (*rep.ratio_vs_sc_opt > max_ratio) max_ratio = *rep.ratio_vs_sc_opt;
        if (rep.relay_count > 0) ++relay_runs;
        if (!*rep.bound_satisfied) {
            if (rep.relay_count > 0)
                ++violations_relay;
            else
                ++violations_no_relay;
        }
        if (deadlocked) ++deadlocks;

        out << "i=" << i << " n=" << inst.n() << " m=" << inst.m() << " gamma=" << rep.gamma
            << " d_c=" << rep.d_c << " greedy=" << rep.greedy_size << " sc_opt=" << *rep.sc_opt_size
            << " mcsc_opt=" << *rep.mcsc_opt_size << " ratio=" << rep.ratio_vs_sc_opt->str()
            << " bound=" << rep.corrected_bound.str() << " bound_ok=" << (*rep.bound_satisfied ? 1 : 0)
            << " relays=" << rep.relay_count << " original=" << (deadlocked ? "deadlock" : "ok")
            << '\n';
    }

    out << "instances=" << cfg.instances << '\n';
    out << "max_ratio=" << max_ratio.str() << '\n';
    out << "violations_no_relay=" << violations_no_relay << '\n';
    out << "violations_relay=" << violations_relay << '\n';
    out << "relay_runs=" << relay_runs << '\n';
    out << "deadlock_rate=" << deadlocks << "/" << cfg.instances << '\n';
    return out.str();
}

}  // namespace mcsc
