#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "knotscan/diagram.hpp"
#include "knotscan/graph.hpp"

namespace knotscan {

// Pairwise intersection classes of all cycles, precomputed once.
class IntersectionOracle {
public:
    IntersectionOracle(const Graph& g, const std::vector<Cycle>& cycles, int workers = 1);

    IntersectionKind kind(std::uint32_t a, std::uint32_t b) const {
        if (a > b) std::swap(a, b);
        return kinds_[static_cast<std::size_t>(a) * n_ + b];
    }

    // All unordered pairs of vertex-disjoint cycles, sorted.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& disjoint_pairs() const {
        return disjoint_pairs_;
    }

private:
    std::size_t n_;
    std::vector<IntersectionKind> kinds_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> disjoint_pairs_;
};

// Connecting-path witness for one consecutive cycle pair: either a single
// shared vertex (nonempty connected intersection) or a genuine path with one
// endpoint in each cycle.
struct QuadWitness {
    bool degenerate = false;
    std::vector<std::uint32_t> path;  // one vertex when degenerate
};

// Canonical representative of a quad's symmetry class: cycles[0] is the
// minimum cycle id, cycles[1] the smaller cycle of the other diagonal.
// Diagonals {cycles[0], cycles[2]} and {cycles[1], cycles[3]} are vertex
// disjoint; witnesses[i] connects cycles[i] to cycles[(i+1)%4].
struct Quad {
    std::array<std::uint32_t, 4> cycles;
    std::array<QuadWitness, 4> witnesses;
};

struct QuadOptions {
    bool chordless_only = false;
    // Also require degenerate single-vertex witnesses to be pairwise disjoint
    // from all other witnesses.
    bool strict_witness = false;
    int workers = 1;
    Deadline deadline;
};

// For a candidate 4-tuple whose diagonals are disjoint and whose consecutive
// intersections are each empty or connected, search for a witness family:
// genuine paths avoid the two non-incident cycles entirely, their interiors
// avoid all four cycles, and genuine paths are pairwise vertex disjoint.
std::optional<std::array<QuadWitness, 4>> find_connecting_paths(
    const Graph& g, const std::vector<Cycle>& cycles, const IntersectionOracle& oracle,
    const std::array<std::uint32_t, 4>& tuple, bool strict_witness);

// One representative per dihedral symmetry class, sorted by cycle tuple.
std::vector<Quad> enumerate_quads(const Graph& g, const std::vector<Cycle>& cycles,
                                  const IntersectionOracle& oracle, const QuadOptions& opts);

// One linking-number equation per disjoint cycle pair selected by some quad:
// sum of the crossing-change variables between the two cycles plus the base
// linking number equals zero.
struct Equation {
    std::uint32_t id;
    std::uint32_t cycle_a, cycle_b;     // cycle_a < cycle_b
    std::vector<std::uint32_t> vars;    // sorted variable indices
    std::int64_t constant;              // lk in the base diagram
};

struct EquationSet {
    std::vector<Equation> equations;  // sorted by (cycle_a, cycle_b), id = position
    std::vector<std::pair<std::uint32_t, std::uint32_t>> related_pairs;  // deduplicated
    std::vector<std::vector<std::uint32_t>> related;  // per-equation neighbor ids

    std::size_t size() const { return equations.size(); }
};

EquationSet build_equations(const Graph& g, const std::vector<Cycle>& cycles,
                            const std::vector<Quad>& quads, const LinkTable& table);

}  // namespace knotscan
