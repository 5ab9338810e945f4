#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "knotscan/graph.hpp"

namespace knotscan {

// One transverse crossing of two nonadjacent straight chords. The edge with
// the lower index passes under. The sign is the z-component sign of
// (over direction) x (under direction) with both edges oriented from their
// lower- to their higher-indexed endpoint.
struct Crossing {
    std::uint32_t under_edge;
    std::uint32_t over_edge;
    int sign;  // +1 or -1
};

// The fixed base embedding: vertex k sits at the rational circle point
// ((1-k^2)/(1+k^2), 2k/(1+k^2)), so vertices are in strictly convex position
// ordered by index, edges are straight chords, and two edges cross exactly
// when their endpoints interleave in the index order.
class Diagram {
public:
    static Diagram canonical(const Graph& g);

    const Graph& graph() const { return *g_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }

    std::pair<mpq_class, mpq_class> position(std::uint32_t vertex) const;

    // Sign of the crossing when the two strands are traversed in the given
    // directions (+1 = low->high endpoint, -1 = reversed).
    static int oriented_sign(const Crossing& c, int over_dir, int under_dir) {
        return c.sign * over_dir * under_dir;
    }

private:
    const Graph* g_ = nullptr;
    std::vector<Crossing> crossings_;
};

// Signed count of crossings where a strand of `a` passes over a strand of
// `b`, under the canonical cycle orientations. Also computed as half the
// total signed crossing count between the two cycles; the two routes must
// agree exactly. Rejects non-disjoint cycles.
std::int64_t linking_number(const Diagram& d, const Cycle& a, const Cycle& b);

// Same, but with either cycle's traversal optionally reversed.
std::int64_t linking_number_oriented(const Diagram& d, const Cycle& a, const Cycle& b,
                                     bool flip_a, bool flip_b);

// Linking numbers of all unordered pairs of vertex-disjoint cycles.
class LinkTable {
public:
    struct Entry {
        std::uint32_t cycle_a, cycle_b;  // cycle_a < cycle_b
        std::int64_t lk;
    };

    const std::vector<Entry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool contains(std::uint32_t a, std::uint32_t b) const;
    std::int64_t lk(std::uint32_t a, std::uint32_t b) const;

    static LinkTable build(const Diagram& d, const std::vector<Cycle>& cycles, int workers = 1);

private:
    std::vector<Entry> entries_;  // sorted by (cycle_a, cycle_b)
};

}  // namespace knotscan
