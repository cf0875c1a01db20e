#include "mcsc/io.hpp"

#include <algorithm>
#include <sstream>

namespace mcsc {

namespace {

struct Line {
    int number;
    std::vector<std::string> tokens;
};

// Comment-stripped, tokenized, non-blank lines.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        ++number;
        std::string_view raw = text.substr(pos, eol - pos);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream iss{std::string(raw)};
        Line line{number, {}};
        std::string tok;
        while (iss >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) lines.push_back(std::move(line));
        if (eol == text.size()) break;
        pos = eol + 1;
    }
    return lines;
}

int parse_int(const Line& line, std::size_t idx, const char* what) {
    if (idx >= line.tokens.size())
        throw ParseError(line.number, std::string("missing ") + what);
    const std::string& tok = line.tokens[idx];
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &used);
    } catch (const std::exception&) {
        throw ParseError(line.number, std::string("invalid ") + what + " '" + tok + "'");
    }
    if (used != tok.size())
        throw ParseError(line.number, std::string("invalid ") + what + " '" + tok + "'");
    return value;
}

void expect_tokens(const Line& line, std::size_t count) {
    if (line.tokens.size() != count)
        throw ParseError(line.number, "expected " + std::to_string(count) + " fields, got " +
                                          std::to_string(line.tokens.size()));
}

std::vector<std::pair<int, int>> parse_edge_lines(const std::vector<Line>& lines,
                                                  std::size_t first, int expected, int id_bound,
                                                  int header_line) {
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<char>> seen(id_bound, std::vector<char>(id_bound, 0));
    for (std::size_t i = first; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (line.tokens[0] != "e")
            throw ParseError(line.number, "unexpected record '" + line.tokens[0] + "'");
        expect_tokens(line, 3);
        int u = parse_int(line, 1, "edge endpoint");
        int v = parse_int(line, 2, "edge endpoint");
        if (u < 0 || u >= id_bound || v < 0 || v >= id_bound)
            throw ParseError(line.number, "edge endpoint out of range [0," +
                                              std::to_string(id_bound) + ")");
        if (u == v) throw ParseError(line.number, "self-loop");
        int a = std::min(u, v), b = std::max(u, v);
        if (seen[a][b]) throw ParseError(line.number, "duplicate edge");
        seen[a][b] = 1;
        edges.emplace_back(a, b);
    }
    if (static_cast<int>(edges.size()) != expected)
        throw ParseError(header_line, "header declares " + std::to_string(expected) +
                                          " edges, found " + std::to_string(edges.size()));
    return edges;
}

}  // namespace

Instance parse_instance(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty input");

    const Line& header = lines[0];
    if (header.tokens[0] != "mcsc") throw ParseError(header.number, "expected 'mcsc' header");
    expect_tokens(header, 4);
    int n = parse_int(header, 1, "element count");
    int m = parse_int(header, 2, "subset count");
    int e = parse_int(header, 3, "edge count");
    if (n < 0 || m < 0 || e < 0) throw ParseError(header.number, "negative count in header");

    std::vector<std::vector<ElementId>> subsets(m);
    std::vector<char> have_subset(m, 0);
    std::size_t i = 1;
    for (; i < lines.size() && lines[i].tokens[0] == "s"; ++i) {
        const Line& line = lines[i];
        int id = parse_int(line, 1, "subset id");
        if (id < 0 || id >= m)
            throw ParseError(line.number, "subset id out of range [0," + std::to_string(m) + ")");
        if (have_subset[id]) throw ParseError(line.number, "duplicate subset id");
        have_subset[id] = 1;
        int k = parse_int(line, 2, "element count");
        if (k < 0) throw ParseError(line.number, "negative element count");
        expect_tokens(line, 3 + static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) {
            int el = parse_int(line, 3 + j, "element id");
            if (el < 0 || el >= n)
                throw ParseError(line.number,
                                 "element id out of range [0," + std::to_string(n) + ")");
            subsets[id].push_back(el);
        }
    }
    for (int id = 0; id < m; ++id)
        if (!have_subset[id])
            throw ParseError(header.number, "subset " + std::to_string(id) + " missing");

    auto edges = parse_edge_lines(lines, i, e, m, header.number);
    return Instance(n, std::move(subsets), std::move(edges));
}

std::string write_instance(const Instance& inst) {
    std::ostringstream out;
    out << "mcsc " << inst.n() << ' ' << inst.m() << ' ' << inst.edges().size() << '\n';
    for (SubsetId s = 0; s < inst.m(); ++s) {
        auto elements = inst.subset(s).to_vector();
        out << "s " << s << ' ' << elements.size();
        for (int e : elements) out << ' ' << e;
        out << '\n';
    }
    for (auto [u, v] : inst.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

CdsGraph parse_cds_graph(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty input");

    const Line& header = lines[0];
    if (header.tokens[0] != "cds") throw ParseError(header.number, "expected 'cds' header");
    expect_tokens(header, 3);
    int n = parse_int(header, 1, "vertex count");
    int e = parse_int(header, 2, "edge count");
    if (n < 0 || e < 0) throw ParseError(header.number, "negative count in header");

    auto edges = parse_edge_lines(lines, 1, e, n, header.number);
    return CdsGraph(n, std::move(edges));
}

std::string write_cds_graph(const CdsGraph& h) {
    std::ostringstream out;
    out << "cds " << h.vertex_count() << ' ' << h.edges().size() << '\n';
    for (auto [u, v] : h.edges()) out << "e " << u << ' ' << v << '\n';
    return out.str();
}

std::vector<SubsetId> parse_solution(std::string_view text) {
    auto lines = tokenize(text);
    if (lines.empty()) throw ParseError(1, "empty input");
    const Line& header = lines[0];
    if (header.tokens[0] != "solution")
        throw ParseError(header.number, "expected 'solution' header");
    expect_tokens(header, 2);
    int k = parse_int(header, 1, "id count");
    if (k < 0) throw ParseError(header.number, "negative id count");

    std::vector<SubsetId> ids;
    if (k > 0) {
        if (lines.size() < 2) throw ParseError(header.number, "missing id line");
        const Line& body = lines[1];
        expect_tokens(body, static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j) ids.push_back(parse_int(body, j, "subset id"));
        if (lines.size() > 2) throw ParseError(lines[2].number, "trailing content");
    } else if (lines.size() > 1) {
        throw ParseError(lines[1].number, "trailing content");
    }
    return ids;
}

std::string write_solution(const std::vector<SubsetId>& chosen) {
    std::vector<SubsetId> ids = chosen;
    std::sort(ids.begin(), ids.end());
    std::ostringstream out;
    out << "solution " << ids.size() << '\n';
    for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? " " : "") << ids[i];
    if (!ids.empty()) out << '\n';
    return out.str();
}

namespace {

std::vector<std::pair<int, int>> gen_edges(std::mt19937_64& rng, const GenConfig& cfg) {
    std::vector<std::pair<int, int>> edges;
    const int m = cfg.m_subsets;
    switch (cfg.graph_kind) {
        case GraphKind::Complete:
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
            break;
        case GraphKind::Path:
            for (int u = 0; u + 1 < m; ++u) edges.emplace_back(u, u + 1);
            break;
        case GraphKind::Cycle:
            for (int u = 0; u + 1 < m; ++u) edges.emplace_back(u, u + 1);
            if (m >= 3) edges.emplace_back(0, m - 1);
            break;
        case GraphKind::Gnp:
            for (int u = 0; u < m; ++u)
                for (int v = u + 1; v < m; ++v)
                    if (rand_prob(rng) < cfg.gnp_q) edges.emplace_back(u, v);
            break;
    }
    return edges;
}

std::vector<std::vector<int>> components_of(int m, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(m);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> comp(m, -1);
    std::vector<std::vector<int>> comps;
    for (int s = 0; s < m; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> members, stack{s};
        comp[s] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            members.push_back(u);
            for (int v : adj[u])
                if (comp[v] == -1) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        std::sort(members.begin(), members.end());
        comps.push_back(std::move(members));
    }
    return comps;
}

}  // namespace

Instance gen_random(const GenConfig& cfg) {
    if (cfg.n_elements < 1 || cfg.m_subsets < 1)
        throw std::invalid_argument("gen_random: need at least one element and one subset");
    if (cfg.element_prob < 0 || cfg.element_prob > 1 || cfg.gnp_q < 0 || cfg.gnp_q > 1)
        throw std::invalid_argument("gen_random: probabilities must lie in [0,1]");

    std::mt19937_64 rng(cfg.seed);
    std::vector<std::vector<ElementId>> subsets(cfg.m_subsets);
    for (int s = 0; s < cfg.m_subsets; ++s)
        for (int e = 0; e < cfg.n_elements; ++e)
            if (rand_prob(rng) < cfg.element_prob) subsets[s].push_back(e);

    auto edges = gen_edges(rng, cfg);

    if (cfg.ensure_feasible) {
        std::vector<char> covered(cfg.n_elements, 0);
        for (const auto& sub : subsets)
            for (int e : sub) covered[e] = 1;
        for (int e = 0; e < cfg.n_elements; ++e)
            if (!covered[e]) subsets[rand_index(rng, cfg.m_subsets)].push_back(e);

        auto comps = components_of(cfg.m_subsets, edges);
        for (std::size_t c = 1; c < comps.size(); ++c) {
            int u = comps[0][rand_index(rng, static_cast<int>(comps[0].size()))];
            int v = comps[c][rand_index(rng, static_cast<int>(comps[c].size()))];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    }

    for (auto& sub : subsets) {
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    }
    return Instance(cfg.n_elements, std::move(subsets), std::move(edges));
}

Fixture builtin_fixture(std::string_view name) {
    if (name == "paper-counterexample") {
        std::vector<std::vector<ElementId>> subsets{{0, 1}, {0}, {1}, {1, 2}, {3}};
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
        return Instance(4, std::move(subsets), std::move(edges));
    }
    if (name == "figure1-cds") {
        return CdsGraph(8, {{0, 1}, {0, 3}, {1, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 6}, {4, 7}});
    }
    if (name == "relay-path") {
        return Instance(3, {{0, 1}, {1}, {2}}, {{0, 1}, {1, 2}});
    }
    throw std::invalid_argument("unknown fixture '" + std::string(name) +
                                "'; valid names: paper-counterexample, figure1-cds, relay-path");
}

}  // namespace mcsc
