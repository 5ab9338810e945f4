#include "knotscan/quads.hpp"

#include <algorithm>
#include <map>
#include <thread>

namespace knotscan {

IntersectionOracle::IntersectionOracle(const Graph& g, const std::vector<Cycle>& cycles,
                                       int workers)
    : n_(cycles.size()), kinds_(cycles.size() * cycles.size(), IntersectionKind::empty) {
    auto classify_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                kinds_[i * n_ + j] = cycle_intersection(g, cycles[i], cycles[j]).kind;
    };
    const int nw = std::max(1, workers);
    if (nw == 1 || n_ < 64) {
        classify_range(0, n_);
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (n_ + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            const std::size_t lo = std::min(n_, w * chunk);
            const std::size_t hi = std::min(n_, lo + chunk);
            if (lo < hi) threads.emplace_back(classify_range, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    for (std::uint32_t i = 0; i < n_; ++i)
        for (std::uint32_t j = i + 1; j < n_; ++j)
            if (kinds_[static_cast<std::size_t>(i) * n_ + j] == IntersectionKind::empty)
                disjoint_pairs_.emplace_back(i, j);
}

namespace {

// All simple paths from a vertex of `from` to a vertex of `to` whose interior
// stays inside `interior_ok` and whose endpoints avoid `forbidden`, sorted by
// (length, vertex sequence).
std::vector<std::vector<std::uint32_t>> slot_candidates(const Graph& g, const Cycle& from,
                                                        const Cycle& to,
                                                        const Bitset& forbidden,
                                                        const Bitset& interior_ok) {
    std::vector<std::vector<std::uint32_t>> found;
    std::vector<std::uint32_t> path;
    Bitset on_path(g.vertex_count());

    auto dfs = [&](auto&& self, std::uint32_t u) -> void {
        for (std::uint32_t w : g.neighbors(u)) {
            if (on_path.test(w)) continue;
            if (to.vertex_mask.test(w)) {
                if (forbidden.test(w)) continue;
                path.push_back(w);
                found.push_back(path);
                path.pop_back();
            } else if (interior_ok.test(w)) {
                on_path.set(w);
                path.push_back(w);
                self(self, w);
                path.pop_back();
                on_path.reset(w);
            }
        }
    };

    for (auto u = from.vertex_mask.find_first(); u != Bitset::npos;
         u = from.vertex_mask.find_next(u)) {
        if (forbidden.test(u)) continue;
        path.assign(1, static_cast<std::uint32_t>(u));
        on_path.reset();
        on_path.set(u);
        dfs(dfs, static_cast<std::uint32_t>(u));
    }
    std::sort(found.begin(), found.end(),
              [](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    return found;
}

}  // namespace

std::optional<std::array<QuadWitness, 4>> find_connecting_paths(
    const Graph& g, const std::vector<Cycle>& cycles, const IntersectionOracle& oracle,
    const std::array<std::uint32_t, 4>& tuple, bool strict_witness) {
    const Cycle* c[4];
    for (int i = 0; i < 4; ++i) c[i] = &cycles[tuple[i]];

    if ((c[0]->vertex_mask & c[2]->vertex_mask).any() ||
        (c[1]->vertex_mask & c[3]->vertex_mask).any())
        throw std::invalid_argument("quad diagonals must be vertex disjoint");

    Bitset all_cycles(g.vertex_count());
    for (int i = 0; i < 4; ++i) all_cycles |= c[i]->vertex_mask;
    const Bitset interior_ok = ~all_cycles;

    struct Slot {
        bool degenerate;
        std::vector<std::vector<std::uint32_t>> candidates;
    };
    std::array<Slot, 4> slots;
    for (int i = 0; i < 4; ++i) {
        const int j = (i + 1) % 4;
        const IntersectionKind kind = oracle.kind(tuple[i], tuple[j]);
        if (kind == IntersectionKind::disconnected) return std::nullopt;
        if (kind == IntersectionKind::connected) {
            slots[i].degenerate = true;
            const Bitset shared = c[i]->vertex_mask & c[j]->vertex_mask;
            for (auto v = shared.find_first(); v != Bitset::npos; v = shared.find_next(v))
                slots[i].candidates.push_back({static_cast<std::uint32_t>(v)});
        } else {
            slots[i].degenerate = false;
            // Condition 1: the path avoids the two non-incident cycles.
            Bitset forbidden = c[(i + 2) % 4]->vertex_mask | c[(i + 3) % 4]->vertex_mask;
            slots[i].candidates = slot_candidates(g, *c[i], *c[j], forbidden, interior_ok);
            if (slots[i].candidates.empty()) return std::nullopt;
        }
    }

    // Backtrack over slots in order; genuine paths must be pairwise vertex
    // disjoint, and in strict mode the degenerate vertices join that check.
    std::array<QuadWitness, 4> witnesses;
    Bitset used(g.vertex_count());
    auto assign = [&](auto&& self, int slot) -> bool {
        if (slot == 4) return true;
        Slot& s = slots[slot];
        if (s.degenerate && !strict_witness) {
            witnesses[slot] = QuadWitness{true, s.candidates.front()};
            return self(self, slot + 1);
        }
        for (const auto& cand : s.candidates) {
            bool clash = false;
            for (std::uint32_t v : cand)
                if (used.test(v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            for (std::uint32_t v : cand) used.set(v);
            witnesses[slot] = QuadWitness{s.degenerate, cand};
            if (self(self, slot + 1)) return true;
            for (std::uint32_t v : cand) used.reset(v);
        }
        return false;
    };
    if (!assign(assign, 0)) return std::nullopt;
    return witnesses;
}

std::vector<Quad> enumerate_quads(const Graph& g, const std::vector<Cycle>& cycles,
                                  const IntersectionOracle& oracle, const QuadOptions& opts) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs = oracle.disjoint_pairs();
    if (opts.chordless_only) {
        std::vector<char> chordless(cycles.size());
        for (std::size_t i = 0; i < cycles.size(); ++i)
            chordless[i] = is_chordless(g, cycles[i]) ? 1 : 0;
        std::erase_if(pairs, [&](const auto& p) {
            return !chordless[p.first] || !chordless[p.second];
        });
    }

    std::vector<Quad> quads;
    for (std::size_t i1 = 0; i1 < pairs.size(); ++i1) {
        opts.deadline.check();
        const auto [a, cc] = pairs[i1];
        for (std::size_t i2 = i1 + 1; i2 < pairs.size(); ++i2) {
            const auto [b, d] = pairs[i2];
            if (a == b || a == d || cc == b || cc == d) continue;
            // Pairs are sorted, so a < cc, b < d and a < b: the tuple below is
            // already the lexicographically least dihedral representative.
            const std::array<std::uint32_t, 4> tuple{a, b, cc, d};
            bool viable = true;
            for (int s = 0; s < 4 && viable; ++s)
                if (oracle.kind(tuple[s], tuple[(s + 1) % 4]) == IntersectionKind::disconnected)
                    viable = false;
            if (!viable) continue;
            auto witnesses = find_connecting_paths(g, cycles, oracle, tuple, opts.strict_witness);
            if (witnesses) quads.push_back(Quad{tuple, std::move(*witnesses)});
        }
    }
    std::sort(quads.begin(), quads.end(),
              [](const Quad& x, const Quad& y) { return x.cycles < y.cycles; });
    return quads;
}

EquationSet build_equations(const Graph& g, const std::vector<Cycle>& cycles,
                            const std::vector<Quad>& quads, const LinkTable& table) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> key_to_id;
    for (const Quad& q : quads) {
        key_to_id.emplace(std::make_pair(q.cycles[0], q.cycles[2]), 0);
        key_to_id.emplace(std::make_pair(std::min(q.cycles[1], q.cycles[3]),
                                         std::max(q.cycles[1], q.cycles[3])),
                          0);
    }
    std::uint32_t next_id = 0;
    for (auto& [key, id] : key_to_id) id = next_id++;

    EquationSet out;
    out.equations.reserve(key_to_id.size());
    for (const auto& [key, id] : key_to_id) {
        Equation eq;
        eq.id = id;
        eq.cycle_a = key.first;
        eq.cycle_b = key.second;
        for (std::uint32_t e : cycles[key.first].edges) {
            for (std::uint32_t f : cycles[key.second].edges) {
                const std::int32_t var = g.var_index(e, f);
                if (var < 0) throw std::logic_error("disjoint cycles yielded adjacent edges");
                eq.vars.push_back(static_cast<std::uint32_t>(var));
            }
        }
        std::sort(eq.vars.begin(), eq.vars.end());
        eq.constant = table.lk(key.first, key.second);
        out.equations.push_back(std::move(eq));
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> rels;
    for (const Quad& q : quads) {
        const std::uint32_t e1 = key_to_id.at({q.cycles[0], q.cycles[2]});
        const std::uint32_t e2 = key_to_id.at({std::min(q.cycles[1], q.cycles[3]),
                                               std::max(q.cycles[1], q.cycles[3])});
        rels.emplace_back(std::min(e1, e2), std::max(e1, e2));
    }
    std::sort(rels.begin(), rels.end());
    rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
    out.related_pairs = std::move(rels);

    out.related.assign(out.equations.size(), {});
    for (const auto& [x, y] : out.related_pairs) {
        out.related[x].push_back(y);
        out.related[y].push_back(x);
    }
    for (auto& nbrs : out.related) std::sort(nbrs.begin(), nbrs.end());
    return out;
}

}  // namespace knotscan
