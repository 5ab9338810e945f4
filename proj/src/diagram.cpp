#include "knotscan/diagram.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace knotscan {

namespace {

std::pair<mpq_class, mpq_class> circle_point(std::uint32_t k) {
    const mpz_class t(k);
    const mpz_class t2 = t * t;
    mpq_class x(1 - t2, 1 + t2);
    mpq_class y(2 * t, 1 + t2);
    x.canonicalize();
    y.canonicalize();
    return {x, y};
}

// Endpoints interleave in the cyclic vertex order iff the straight chords
// cross (vertices lie on the circle in index order).
bool chords_cross(Graph::EdgePair e, Graph::EdgePair f) {
    const auto [a, b] = e;  // a < b
    const auto [c, d] = f;  // c < d
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

}  // namespace

std::pair<mpq_class, mpq_class> Diagram::position(std::uint32_t vertex) const {
    return circle_point(vertex);
}

Diagram Diagram::canonical(const Graph& g) {
    Diagram d;
    d.g_ = &g;
    for (const auto& [e, f] : g.nonadjacent_edge_pairs()) {
        if (!chords_cross(g.edge(e), g.edge(f))) continue;
        const auto [pu, qu] = g.edge(e);  // under strand (lower edge index)
        const auto [po, qo] = g.edge(f);
        const auto u0 = circle_point(pu), u1 = circle_point(qu);
        const auto o0 = circle_point(po), o1 = circle_point(qo);
        const mpq_class ux = u1.first - u0.first, uy = u1.second - u0.second;
        const mpq_class ox = o1.first - o0.first, oy = o1.second - o0.second;
        const mpq_class cross_z = ox * uy - oy * ux;
        const int s = sgn(cross_z);
        if (s == 0) throw std::logic_error("crossing chords cannot be parallel");
        d.crossings_.push_back(Crossing{e, f, s});
    }
    // Pair enumeration above is already sorted by (under, over).
    return d;
}

namespace {

std::int64_t linking_impl(const Diagram& d, const Cycle& a, const Cycle& b, int flip_a,
                          int flip_b) {
    if ((a.vertex_mask & b.vertex_mask).any())
        throw std::invalid_argument("linking number requires disjoint cycles");
    std::int64_t over_sum = 0;
    std::int64_t total = 0;
    for (const Crossing& c : d.crossings()) {
        const bool over_in_a = a.has_edge(c.over_edge), under_in_b = b.has_edge(c.under_edge);
        const bool over_in_b = b.has_edge(c.over_edge), under_in_a = a.has_edge(c.under_edge);
        if (over_in_a && under_in_b) {
            const int s = Diagram::oriented_sign(c, a.edge_dir[c.over_edge] * flip_a,
                                                 b.edge_dir[c.under_edge] * flip_b);
            over_sum += s;
            total += s;
        } else if (over_in_b && under_in_a) {
            total += Diagram::oriented_sign(c, b.edge_dir[c.over_edge] * flip_b,
                                            a.edge_dir[c.under_edge] * flip_a);
        }
    }
    if (total != 2 * over_sum)
        throw std::logic_error("over-sum and half-total linking computations disagree");
    return over_sum;
}

}  // namespace

std::int64_t linking_number(const Diagram& d, const Cycle& a, const Cycle& b) {
    return linking_impl(d, a, b, 1, 1);
}

std::int64_t linking_number_oriented(const Diagram& d, const Cycle& a, const Cycle& b,
                                     bool flip_a, bool flip_b) {
    return linking_impl(d, a, b, flip_a ? -1 : 1, flip_b ? -1 : 1);
}

bool LinkTable::contains(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    const Entry key{a, b, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& x, const Entry& y) {
                                   return std::tie(x.cycle_a, x.cycle_b) <
                                          std::tie(y.cycle_a, y.cycle_b);
                               });
    return it != entries_.end() && it->cycle_a == a && it->cycle_b == b;
}

std::int64_t LinkTable::lk(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    const Entry key{a, b, 0};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key,
                               [](const Entry& x, const Entry& y) {
                                   return std::tie(x.cycle_a, x.cycle_b) <
                                          std::tie(y.cycle_a, y.cycle_b);
                               });
    if (it == entries_.end() || it->cycle_a != a || it->cycle_b != b)
        throw std::invalid_argument("cycle pair not in link table");
    return it->lk;
}

LinkTable LinkTable::build(const Diagram& d, const std::vector<Cycle>& cycles, int workers) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t i = 0; i < cycles.size(); ++i)
        for (std::uint32_t j = i + 1; j < cycles.size(); ++j)
            if (!(cycles[i].vertex_mask & cycles[j].vertex_mask).any()) pairs.emplace_back(i, j);

    LinkTable table;
    table.entries_.resize(pairs.size());
    auto compute_range = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t p = lo; p < hi; ++p) {
            const auto [i, j] = pairs[p];
            table.entries_[p] = Entry{i, j, linking_number(d, cycles[i], cycles[j])};
        }
    };
    const int nw = std::max(1, workers);
    if (nw == 1 || pairs.size() < 64) {
        compute_range(0, pairs.size());
    } else {
        std::vector<std::thread> threads;
        const std::size_t chunk = (pairs.size() + nw - 1) / nw;
        for (int w = 0; w < nw; ++w) {
            const std::size_t lo = std::min(pairs.size(), w * chunk);
            const std::size_t hi = std::min(pairs.size(), lo + chunk);
            if (lo < hi) threads.emplace_back(compute_range, lo, hi);
        }
        for (auto& t : threads) t.join();
    }
    // pairs were generated in sorted order, so entries_ is sorted already.
    return table;
}

}  // namespace knotscan
