#pragma once

#include <optional>

#include "knotscan/search.hpp"

namespace knotscan {

// One equation per unordered disjoint cycle pair, over the same variable
// universe as the quad search: all pairwise linking numbers must vanish.
struct PairwiseSystem {
    struct Row {
        std::uint32_t cycle_a, cycle_b;
        std::vector<std::uint32_t> vars;
        std::int64_t constant;  // lk in the base diagram
    };
    std::vector<Row> rows;
};

PairwiseSystem build_pairwise_system(const Graph& g, const std::vector<Cycle>& cycles,
                                     const LinkTable& table);

struct ILResult {
    bool intrinsically_linked;
    std::optional<Certificate> certificate;  // even-linking witness when not IL
};

// Infeasible over GF(2) means every embedding keeps some pair's linking
// number odd, so the graph is intrinsically linked.
ILResult detect_il(const Graph& g, const PairwiseSystem& sys);

struct ZeroLinkingResult {
    bool feasible;
    std::optional<Certificate> certificate;
};

// Exact integer solve: a witness embedding has every pairwise linking number
// exactly zero.
ZeroLinkingResult detect_zero_linking(const Graph& g, const PairwiseSystem& sys);

}  // namespace knotscan
