#include "mcsc/analysis.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "mcsc/graph_ops.hpp"

namespace mcsc {

Rational harmonic(int k) {
    if (k < 0) throw std::invalid_argument("harmonic: negative argument");
    Rational h;
    for (int i = 1; i <= k; ++i) h += Rational(1, i);
    return h;
}

Rational ratio_bound(int d_c, int gamma) {
    if (d_c < 1 || gamma < 1)
        throw std::invalid_argument("ratio_bound: requires d_c >= 1 and gamma >= 1");
    return Rational(d_c) * (Rational(1) + harmonic(gamma - 1));
}

Rational original_claimed_bound(int d_c, int gamma) {
    if (d_c < 1 || gamma < 1)
        throw std::invalid_argument("original_claimed_bound: requires d_c >= 1 and gamma >= 1");
    return Rational(1) + Rational(d_c) * harmonic(gamma - 1);
}

ChargeAudit audit_charges(const Instance& inst, const GreedyTrace& trace,
                          const Solution& sc_witness) {
    // Rebuild the per-element charges from the trace.
    std::vector<std::optional<Rational>> charge(inst.n());
    int relay_count = 0;
    for (const auto& step : trace.steps) {
        if (step.kind == StepKind::Relay) {
            ++relay_count;
            if (!step.newly_covered.empty())
                throw std::invalid_argument("audit_charges: relay step with coverage");
            continue;
        }
        if (!step.charge)
            throw std::invalid_argument("audit_charges: covering step without a charge");
        if (step.charge->den != static_cast<int>(step.newly_covered.size()))
            throw std::invalid_argument("audit_charges: charge denominator mismatch");
        if (step.kind == StepKind::Path) {
            if (!step.path || step.charge->num != step.path->length)
                throw std::invalid_argument("audit_charges: charge numerator mismatch");
        } else if (step.charge->num != 1) {
            throw std::invalid_argument("audit_charges: initial charge numerator mismatch");
        }
        for (ElementId e : step.newly_covered) {
            inst.check_element_id(e);
            if (charge[e])
                throw std::invalid_argument("audit_charges: element " + std::to_string(e) +
                                            " charged twice");
            charge[e] = Rational(step.charge->num, step.charge->den);
        }
    }
    for (ElementId e = 0; e < inst.n(); ++e)
        if (!charge[e])
            throw std::invalid_argument("audit_charges: element " + std::to_string(e) +
                                        " never charged");
    if (relay_count != trace.relay_count)
        throw std::invalid_argument("audit_charges: relay count mismatch");

    ChargeAudit audit;
    audit.relay_count = relay_count;
    audit.eq3_applicable = relay_count == 0;
    for (ElementId e = 0; e < inst.n(); ++e) audit.total_charge += *charge[e];
    audit.accounting_ok =
        audit.total_charge == Rational(trace.final_solution.size() - relay_count);

    const int d_c = cover_diameter(inst);
    audit.per_subset_ok = true;
    for (SubsetId s : sc_witness.chosen) {
        const Bitset& members = inst.subset(s);
        if (!members.any()) continue;  // empty subset carries no charge
        Rational total;
        members.for_each([&](ElementId e) { total += *charge[e]; });
        Rational bound = Rational(d_c) * (Rational(1) + harmonic(members.count() - 1));
        if (total > bound) {
            audit.per_subset_ok = false;
            audit.violations.push_back(ChargeViolation{s, total, bound});
        }
    }
    return audit;
}

BoundReport build_report(const Instance& inst, bool run_oracles, const OracleLimits& limits) {
    auto result = modified_greedy(inst);

    BoundReport rep;
    for (SubsetId s = 0; s < inst.m(); ++s) rep.gamma = std::max(rep.gamma, inst.subset_size(s));
    if (rep.gamma < 1)
        throw std::invalid_argument("build_report: bound undefined for an empty universe");
    rep.d_c = cover_diameter(inst);
    rep.corrected_bound = ratio_bound(rep.d_c, rep.gamma);
    rep.original_claimed_bound = original_claimed_bound(rep.d_c, rep.gamma);
    rep.greedy_size = result.solution.size();
    rep.relay_count = result.trace.relay_count;

    if (run_oracles) {
        Solution sc = min_set_cover(inst, limits);
        Solution csc = min_csc(inst, limits);
        rep.sc_opt_size = sc.size();
        rep.mcsc_opt_size = csc.size();
        rep.ratio_vs_sc_opt = Rational(rep.greedy_size, sc.size());
        rep.bound_satisfied = Rational(rep.greedy_size) <= rep.corrected_bound * Rational(sc.size());
    }
    return rep;
}

}  // namespace mcsc
