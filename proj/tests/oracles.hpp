#pragma once

// Independent reference implementations used to freeze expected values.
// These deliberately avoid the library's algorithms: cycles come from
// subset-permutation enumeration, linear systems from exhaustive assignment
// search, quads from unconstrained path enumeration with post-hoc filtering.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "knotscan/diagram.hpp"
#include "knotscan/graph.hpp"
#include "knotscan/linsys.hpp"

namespace testutil {

using knotscan::Cycle;
using knotscan::Graph;

// Every simple cycle as its canonical vertex sequence: for each vertex
// subset, try all cyclic arrangements anchored at the subset minimum.
inline std::vector<std::vector<std::uint32_t>> oracle_cycles(const Graph& g) {
    const std::uint32_t n = g.vertex_count();
    std::vector<std::vector<std::uint32_t>> found;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::uint32_t> verts;
        for (std::uint32_t v = 0; v < n; ++v)
            if (mask & (1u << v)) verts.push_back(v);
        if (verts.size() < 3) continue;
        std::vector<std::uint32_t> rest(verts.begin() + 1, verts.end());
        std::sort(rest.begin(), rest.end());
        do {
            if (rest.front() > rest.back()) continue;  // one orientation only
            std::vector<std::uint32_t> seq{verts.front()};
            seq.insert(seq.end(), rest.begin(), rest.end());
            bool ok = true;
            for (std::size_t i = 0; i < seq.size() && ok; ++i)
                ok = g.has_edge(seq[i], seq[(i + 1) % seq.size()]);
            if (ok) found.push_back(seq);
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return found;
}

inline std::vector<std::pair<std::uint32_t, std::uint32_t>> oracle_nonadjacent_pairs(
    const Graph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        for (std::uint32_t f = e + 1; f < g.edge_count(); ++f) {
            const auto [a, b] = g.edge(e);
            const auto [c, d] = g.edge(f);
            if (a != c && a != d && b != c && b != d) out.emplace_back(e, f);
        }
    }
    return out;
}

// Exhaustive GF(2) satisfiability over all assignments.
inline bool oracle_gf2_feasible(std::size_t num_vars,
                                const std::vector<std::pair<std::vector<std::uint32_t>, int>>& rows) {
    for (std::uint64_t assign = 0; assign < (1ull << num_vars); ++assign) {
        bool ok = true;
        for (const auto& [vars, rhs] : rows) {
            int sum = 0;
            for (std::uint32_t v : vars) sum ^= static_cast<int>((assign >> v) & 1);
            if (sum != (rhs & 1)) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return num_vars == 0 ? rows.empty() ||
                               std::all_of(rows.begin(), rows.end(),
                                           [](const auto& r) { return (r.second & 1) == 0; })
                         : false;
}

// Brute-force integer search over the box |x_i| <= bound.
inline std::optional<std::vector<std::int64_t>> oracle_integer_box(
    const knotscan::exact::System& sys, std::int64_t bound) {
    const std::size_t nv = sys.num_vars;
    std::vector<std::int64_t> x(nv, -bound);
    while (true) {
        bool ok = true;
        for (const auto& row : sys.rows) {
            std::int64_t sum = 0;
            for (const auto& t : row.terms) sum += t.coeff * x[t.var];
            if (sum != row.rhs) {
                ok = false;
                break;
            }
        }
        if (ok) return x;
        std::size_t i = 0;
        while (i < nv && x[i] == bound) x[i++] = -bound;
        if (i == nv) return std::nullopt;
        ++x[i];
    }
}

// Linking number recomputed from raw crossings and vertex sequences as half
// the total signed crossing count, without using Cycle::edge_dir.
inline std::int64_t oracle_linking_half_total(const knotscan::Diagram& d, const Cycle& a,
                                              const Cycle& b) {
    const Graph& g = d.graph();
    auto direction = [&](const Cycle& c, std::uint32_t edge) -> int {
        const auto [lo, hi] = g.edge(edge);
        const auto& seq = c.vertex_seq;
        for (std::size_t i = 0; i < seq.size(); ++i) {
            const std::uint32_t u = seq[i], v = seq[(i + 1) % seq.size()];
            if (u == lo && v == hi) return 1;
            if (u == hi && v == lo) return -1;
        }
        return 0;
    };
    std::int64_t total = 0;
    for (const auto& c : d.crossings()) {
        const int over_a = direction(a, c.over_edge), under_b = direction(b, c.under_edge);
        const int over_b = direction(b, c.over_edge), under_a = direction(a, c.under_edge);
        if (over_a != 0 && under_b != 0) total += c.sign * over_a * under_b;
        if (over_b != 0 && under_a != 0) total += c.sign * over_b * under_a;
    }
    if (total % 2 != 0) throw std::logic_error("odd total signed crossing count");
    return total / 2;
}

// --- brute-force quad oracle -------------------------------------------------

// All simple paths between two vertex sets, unrestricted.
inline void oracle_all_paths(const Graph& g, const std::vector<char>& from,
                             const std::vector<char>& to,
                             std::vector<std::vector<std::uint32_t>>* out) {
    std::vector<std::uint32_t> path;
    std::vector<char> used(g.vertex_count(), 0);
    auto dfs = [&](auto&& self, std::uint32_t u) -> void {
        if (to[u] && path.size() >= 2) {
            out->push_back(path);
            return;  // interior may not pass through the target cycle
        }
        for (std::uint32_t w : g.neighbors(u)) {
            if (used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            self(self, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        if (!from[s]) continue;
        used.assign(g.vertex_count(), 0);
        used[s] = 1;
        path.assign(1, s);
        dfs(dfs, s);
    }
}

// Checks the quad definition for an ordered 4-tuple by unconstrained path
// enumeration followed by literal condition filtering.
inline bool oracle_is_quad(const Graph& g, const std::vector<Cycle>& cycles,
                           const std::array<std::uint32_t, 4>& t) {
    const Cycle* c[4];
    for (int i = 0; i < 4; ++i) c[i] = &cycles[t[i]];
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (t[i] == t[j]) return false;
    if ((c[0]->vertex_mask & c[2]->vertex_mask).any()) return false;
    if ((c[1]->vertex_mask & c[3]->vertex_mask).any()) return false;

    std::array<std::vector<std::vector<std::uint32_t>>, 4> candidates;
    std::array<bool, 4> needs_path{};
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        const auto inter = cycle_intersection(g, *c[i], *c[j]);
        if (inter.kind == knotscan::IntersectionKind::disconnected) return false;
        if (inter.kind == knotscan::IntersectionKind::connected) continue;
        needs_path[i] = true;
        std::vector<char> from(g.vertex_count(), 0), to(g.vertex_count(), 0);
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
            from[v] = c[i]->vertex_mask.test(v);
            to[v] = c[j]->vertex_mask.test(v);
        }
        std::vector<std::vector<std::uint32_t>> all;
        oracle_all_paths(g, from, to, &all);
        for (const auto& p : all) {
            bool ok = true;
            for (std::size_t k = 0; k < p.size() && ok; ++k) {
                const std::uint32_t v = p[k];
                // condition 1: disjoint from the two non-incident cycles
                if (c[(i + 2) % 4]->vertex_mask.test(v) || c[(i + 3) % 4]->vertex_mask.test(v))
                    ok = false;
                // condition 2: interior avoids both endpoint cycles
                if (k > 0 && k + 1 < p.size() &&
                    (c[i]->vertex_mask.test(v) || c[j]->vertex_mask.test(v)))
                    ok = false;
            }
            if (ok) candidates[i].push_back(p);
        }
        if (candidates[i].empty()) return false;
    }

    // condition 3: some combination of genuine paths is pairwise disjoint
    std::vector<int> slots;
    for (int i = 0; i < 4; ++i)
        if (needs_path[i]) slots.push_back(i);
    std::vector<std::size_t> pick(slots.size(), 0);
    while (true) {
        bool disjoint = true;
        for (std::size_t a = 0; a < slots.size() && disjoint; ++a)
            for (std::size_t b = a + 1; b < slots.size() && disjoint; ++b)
                for (std::uint32_t va : candidates[slots[a]][pick[a]])
                    for (std::uint32_t vb : candidates[slots[b]][pick[b]])
                        if (va == vb) {
                            disjoint = false;
                            break;
                        }
        if (disjoint) return true;
        std::size_t i = 0;
        while (i < slots.size() && pick[i] + 1 == candidates[slots[i]].size()) pick[i++] = 0;
        if (i == slots.size()) return false;
        ++pick[i];
    }
}

// Canonical keys of all quads, via ordered 4-tuples over disjoint pairs.
inline std::set<std::array<std::uint32_t, 4>> oracle_quad_keys(
    const Graph& g, const std::vector<Cycle>& cycles, bool chordless_only) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> disjoint;
    for (std::uint32_t i = 0; i < cycles.size(); ++i)
        for (std::uint32_t j = i + 1; j < cycles.size(); ++j)
            if (!(cycles[i].vertex_mask & cycles[j].vertex_mask).any()) disjoint.emplace_back(i, j);

    std::set<std::array<std::uint32_t, 4>> keys;
    for (const auto& [a, c] : disjoint) {
        for (const auto& [b, d] : disjoint) {
            if (a == b || a == d || c == b || c == d) continue;
            if (chordless_only &&
                !(is_chordless(g, cycles[a]) && is_chordless(g, cycles[b]) &&
                  is_chordless(g, cycles[c]) && is_chordless(g, cycles[d])))
                continue;
            // every ordered arrangement with diagonals {a,c} and {b,d}
            for (const auto& t : {std::array<std::uint32_t, 4>{a, b, c, d},
                                  std::array<std::uint32_t, 4>{a, d, c, b}}) {
                if (!oracle_is_quad(g, cycles, t)) continue;
                const std::uint32_t m = *std::min_element(t.begin(), t.end());
                std::array<std::uint32_t, 4> key;
                if (m == a || m == c) {
                    key = {std::min(a, c), std::min(b, d), std::max(a, c), std::max(b, d)};
                    if (std::min(a, c) != m) key = {m, std::min(b, d), std::max(a, c), std::max(b, d)};
                    key = {std::min(a, c), std::min(b, d), std::max(a, c), std::max(b, d)};
                } else {
                    key = {std::min(b, d), std::min(a, c), std::max(b, d), std::max(a, c)};
                }
                keys.insert(key);
            }
        }
    }
    return keys;
}

}  // namespace testutil
