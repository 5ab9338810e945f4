#include "knotscan/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace knotscan {

namespace {

std::uint64_t pack(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Graph Graph::from_edges(std::uint32_t vertex_count, std::vector<EdgePair> edges,
                        std::vector<std::string> labels) {
    Graph g;
    g.n_ = vertex_count;
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop edge not allowed");
        if (u >= vertex_count || v >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    g.edges_ = std::move(edges);
    if (labels.empty()) {
        labels.reserve(vertex_count);
        for (std::uint32_t v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
    }
    if (labels.size() != vertex_count) throw std::invalid_argument("label count mismatch");
    g.labels_ = std::move(labels);
    g.finalize();
    return g;
}

void Graph::finalize() {
    adj_.assign(n_, {});
    edge_lookup_.clear();
    for (std::uint32_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        edge_lookup_.emplace(pack(u, v), e);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

    const std::size_t m = edges_.size();
    var_index_.assign(m * m, -1);
    nonadj_pairs_.clear();
    for (std::uint32_t e = 0; e < m; ++e) {
        for (std::uint32_t f = e + 1; f < m; ++f) {
            if (edges_adjacent(e, f)) continue;
            const auto idx = static_cast<std::int32_t>(nonadj_pairs_.size());
            nonadj_pairs_.emplace_back(e, f);
            var_index_[static_cast<std::size_t>(e) * m + f] = idx;
            var_index_[static_cast<std::size_t>(f) * m + e] = idx;
        }
    }
}

std::int32_t Graph::edge_index(std::uint32_t u, std::uint32_t v) const {
    auto it = edge_lookup_.find(pack(u, v));
    return it == edge_lookup_.end() ? -1 : static_cast<std::int32_t>(it->second);
}

bool Graph::edges_adjacent(std::uint32_t e, std::uint32_t f) const {
    const auto& a = edges_[e];
    const auto& b = edges_[f];
    return a.first == b.first || a.first == b.second || a.second == b.first ||
           a.second == b.second;
}

Graph Graph::from_edge_list(const std::string& text) {
    std::vector<std::string> labels;
    std::unordered_map<std::string, std::uint32_t> index_of;
    std::vector<EdgePair> edges;
    std::unordered_map<std::uint64_t, int> seen;  // pair -> line of first occurrence

    auto intern = [&](const std::string& lbl) {
        auto it = index_of.find(lbl);
        if (it != index_of.end()) return it->second;
        const auto idx = static_cast<std::uint32_t>(labels.size());
        labels.push_back(lbl);
        index_of.emplace(lbl, idx);
        return idx;
    };

    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 2)
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": expected two vertex labels, got " +
                                         std::to_string(toks.size()));
        if (toks[0] == toks[1])
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": loop edge '" +
                                         toks[0] + " " + toks[1] + "' not allowed");
        const std::uint32_t u = intern(toks[0]);
        const std::uint32_t v = intern(toks[1]);
        if (!seen.emplace(pack(u, v), lineno).second)
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": duplicate edge '" +
                                         toks[0] + " " + toks[1] + "'");
        edges.emplace_back(u, v);
    }
    return from_edges(static_cast<std::uint32_t>(labels.size()), std::move(edges),
                      std::move(labels));
}

Graph Graph::from_adjacency_matrix(const std::string& text) {
    std::vector<std::string> rows;
    std::istringstream iss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(iss, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 1 || toks[0].find_first_not_of("01") != std::string::npos)
            throw ParseError(lineno, "line " + std::to_string(lineno) +
                                         ": expected a row of 0/1 characters");
        rows.push_back(toks[0]);
    }
    const std::size_t n = rows.size();
    for (std::size_t i = 0; i < n; ++i)
        if (rows[i].size() != n)
            throw ParseError(0, "adjacency matrix is not square (" + std::to_string(n) +
                                    " rows, row " + std::to_string(i + 1) + " has " +
                                    std::to_string(rows[i].size()) + " columns)");
    std::vector<EdgePair> edges;
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i][i] != '0') throw ParseError(0, "adjacency matrix has a nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j) {
            if (rows[i][j] != rows[j][i])
                throw ParseError(0, "adjacency matrix is not symmetric");
            if (rows[i][j] == '1')
                edges.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
        }
    }
    return from_edges(static_cast<std::uint32_t>(n), std::move(edges));
}

Graph Graph::generate(const std::string& name) {
    std::string s;
    for (char c : name) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));

    if (s == "petersen") {
        std::vector<EdgePair> edges;
        for (std::uint32_t i = 0; i < 5; ++i) {
            edges.emplace_back(i, (i + 1) % 5);        // outer pentagon
            edges.emplace_back(i, i + 5);              // spokes
            edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
        }
        return from_edges(10, std::move(edges));
    }
    if (s == "cube") {
        std::vector<EdgePair> edges;
        for (std::uint32_t u = 0; u < 8; ++u)
            for (std::uint32_t b = 0; b < 3; ++b)
                if (const std::uint32_t v = u ^ (1u << b); u < v) edges.emplace_back(u, v);
        return from_edges(8, std::move(edges));
    }
    if (s == "triangle") return from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    if (s == "tree7") {
        std::vector<EdgePair> edges;
        for (std::uint32_t v = 1; v < 7; ++v) edges.emplace_back((v - 1) / 2, v);
        return from_edges(7, std::move(edges));
    }

    if (!s.empty() && s[0] == 'k') {
        const std::string digits = s.substr(1);
        if (!digits.empty() &&
            digits.find_first_not_of("0123456789") == std::string::npos) {
            // "k7" is the complete graph; "k3311" is complete multipartite with
            // one digit per part.
            std::vector<std::uint32_t> parts;
            if (digits.size() == 1) {
                parts.assign(digits[0] - '0', 1);
            } else {
                for (char c : digits) {
                    if (c == '0') throw std::invalid_argument("empty part in generator '" + name + "'");
                    parts.push_back(static_cast<std::uint32_t>(c - '0'));
                }
            }
            std::vector<std::uint32_t> part_of;
            for (std::uint32_t p = 0; p < parts.size(); ++p)
                for (std::uint32_t i = 0; i < parts[p]; ++i) part_of.push_back(p);
            const auto n = static_cast<std::uint32_t>(part_of.size());
            if (n < 1) throw std::invalid_argument("empty generator '" + name + "'");
            std::vector<EdgePair> edges;
            for (std::uint32_t u = 0; u < n; ++u)
                for (std::uint32_t v = u + 1; v < n; ++v)
                    if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
            return from_edges(n, std::move(edges));
        }
    }
    throw std::invalid_argument("unknown generator '" + name + "'");
}

std::uint64_t Graph::canonical_hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ULL;
        }
    };
    mix(n_);
    mix(edges_.size());
    for (const auto& [u, v] : edges_) mix(pack(u, v));
    return h;
}

namespace {

// Cycles rooted at r: simple paths r -> ... -> u with all interior vertices
// greater than r, closed by the edge (u, r). Requiring path[1] < u emits each
// undirected cycle once, already in canonical orientation.
void cycles_from_root(const Graph& g, std::uint32_t r, std::vector<std::uint32_t>& path,
                      std::vector<char>& on_path, std::vector<Cycle>& out) {
    const std::uint32_t u = path.back();
    for (std::uint32_t w : g.neighbors(u)) {
        if (w == r) {
            if (path.size() >= 3 && path[1] < u) {
                Cycle c;
                c.vertex_seq = path;
                out.push_back(std::move(c));
            }
        } else if (w > r && !on_path[w]) {
            on_path[w] = 1;
            path.push_back(w);
            cycles_from_root(g, r, path, on_path, out);
            path.pop_back();
            on_path[w] = 0;
        }
    }
}

}  // namespace

std::vector<Cycle> enumerate_cycles(const Graph& g) {
    std::vector<Cycle> cycles;
    std::vector<std::uint32_t> path;
    std::vector<char> on_path(g.vertex_count(), 0);
    for (std::uint32_t r = 0; r < g.vertex_count(); ++r) {
        path.assign(1, r);
        on_path[r] = 1;
        cycles_from_root(g, r, path, on_path, cycles);
        on_path[r] = 0;
    }
    std::sort(cycles.begin(), cycles.end(), [](const Cycle& a, const Cycle& b) {
        if (a.vertex_seq.size() != b.vertex_seq.size())
            return a.vertex_seq.size() < b.vertex_seq.size();
        return a.vertex_seq < b.vertex_seq;
    });

    const std::uint32_t m = g.edge_count();
    for (std::uint32_t i = 0; i < cycles.size(); ++i) {
        Cycle& c = cycles[i];
        c.id = i;
        c.vertex_mask.resize(g.vertex_count());
        c.edge_mask.resize(m);
        c.edge_dir.assign(m, 0);
        const std::size_t k = c.vertex_seq.size();
        for (std::size_t p = 0; p < k; ++p) {
            const std::uint32_t a = c.vertex_seq[p];
            const std::uint32_t b = c.vertex_seq[(p + 1) % k];
            const std::int32_t e = g.edge_index(a, b);
            if (e < 0) throw std::logic_error("cycle traversal uses a missing edge");
            c.vertex_mask.set(a);
            c.edge_mask.set(static_cast<std::size_t>(e));
            c.edges.push_back(static_cast<std::uint32_t>(e));
            c.edge_dir[static_cast<std::size_t>(e)] = a < b ? 1 : -1;
        }
        std::sort(c.edges.begin(), c.edges.end());
    }
    return cycles;
}

bool is_chordless(const Graph& g, const Cycle& c) {
    const auto& vs = c.vertex_seq;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const std::int32_t e = g.edge_index(vs[i], vs[j]);
            if (e >= 0 && !c.edge_mask.test(static_cast<std::size_t>(e))) return false;
        }
    }
    return true;
}

CycleIntersection cycle_intersection(const Graph& g, const Cycle& a, const Cycle& b) {
    if (a.id == b.id && a.vertex_seq == b.vertex_seq)
        throw std::invalid_argument("cycle_intersection requires distinct cycles");
    CycleIntersection out;
    const Bitset shared_v = a.vertex_mask & b.vertex_mask;
    const Bitset shared_e = a.edge_mask & b.edge_mask;
    for (auto v = shared_v.find_first(); v != Bitset::npos; v = shared_v.find_next(v))
        out.vertices.push_back(static_cast<std::uint32_t>(v));
    for (auto e = shared_e.find_first(); e != Bitset::npos; e = shared_e.find_next(e))
        out.edges.push_back(static_cast<std::uint32_t>(e));

    if (out.vertices.empty()) {
        out.kind = IntersectionKind::empty;
        return out;
    }
    // BFS over the shared subgraph only.
    std::vector<std::uint32_t> stack{out.vertices.front()};
    Bitset visited(g.vertex_count());
    visited.set(out.vertices.front());
    while (!stack.empty()) {
        const std::uint32_t u = stack.back();
        stack.pop_back();
        for (std::uint32_t e : out.edges) {
            const auto& [x, y] = g.edge(e);
            std::uint32_t w;
            if (x == u) w = y;
            else if (y == u) w = x;
            else continue;
            if (!visited.test(w)) {
                visited.set(w);
                stack.push_back(w);
            }
        }
    }
    const bool connected =
        std::all_of(out.vertices.begin(), out.vertices.end(),
                    [&](std::uint32_t v) { return visited.test(v); });
    out.kind = connected ? IntersectionKind::connected : IntersectionKind::disconnected;
    return out;
}

}  // namespace knotscan
