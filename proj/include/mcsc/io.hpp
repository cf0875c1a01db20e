#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcsc/cds_graph.hpp"
#include "mcsc/core.hpp"

namespace mcsc {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Instance format, line oriented, '#' comments:
//   mcsc <n> <m> <e>
//   s <id> <k> <e1> ... <ek>      (m lines, each id exactly once)
//   e <u> <v>                     (e lines, no duplicates, no self-loops)
Instance parse_instance(std::string_view text);
std::string write_instance(const Instance& inst);

// CDS graph format:
//   cds <n> <e>
//   e <u> <v>
CdsGraph parse_cds_graph(std::string_view text);
std::string write_cds_graph(const CdsGraph& h);

// Solution format:
//   solution <k>
//   <id1> ... <idk>
std::vector<SubsetId> parse_solution(std::string_view text);
std::string write_solution(const std::vector<SubsetId>& chosen);

enum class GraphKind { Complete, Path, Cycle, Gnp };

struct GenConfig {
    int n_elements = 8;
    int m_subsets = 5;
    double element_prob = 0.3;
    GraphKind graph_kind = GraphKind::Gnp;
    double gnp_q = 0.5;
    std::uint64_t seed = 0;
    bool ensure_feasible = true;
};

// Seeded instance generator; the seed fully determines the output. With
// ensure_feasible, uncovered elements are patched into uniformly chosen
// subsets and graph components joined through uniformly chosen
// representatives, all from the same seeded stream.
Instance gen_random(const GenConfig& cfg);

using Fixture = std::variant<Instance, CdsGraph>;

// Built-in instances: "paper-counterexample", "figure1-cds", "relay-path".
Fixture builtin_fixture(std::string_view name);

// Portable draws from a seeded engine. std::mt19937_64 output is pinned by
// the standard; the distributions here avoid the implementation-defined
// <random> ones.
inline std::uint64_t rand_u64(std::mt19937_64& rng) { return rng(); }
inline int rand_index(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}
inline double rand_prob(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace mcsc
