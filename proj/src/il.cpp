#include "knotscan/il.hpp"

#include <algorithm>

namespace knotscan {

PairwiseSystem build_pairwise_system(const Graph& g, const std::vector<Cycle>& cycles,
                                     const LinkTable& table) {
    PairwiseSystem sys;
    sys.rows.reserve(table.size());
    for (const auto& entry : table.entries()) {
        PairwiseSystem::Row row;
        row.cycle_a = entry.cycle_a;
        row.cycle_b = entry.cycle_b;
        row.constant = entry.lk;
        for (std::uint32_t e : cycles[entry.cycle_a].edges) {
            for (std::uint32_t f : cycles[entry.cycle_b].edges) {
                const std::int32_t v = g.var_index(e, f);
                if (v < 0) throw std::logic_error("disjoint cycles yielded adjacent edges");
                row.vars.push_back(static_cast<std::uint32_t>(v));
            }
        }
        std::sort(row.vars.begin(), row.vars.end());
        sys.rows.push_back(std::move(row));
    }
    return sys;
}

ILResult detect_il(const Graph& g, const PairwiseSystem& sys) {
    gf2::System g2;
    g2.num_vars = g.var_count();
    for (std::uint32_t i = 0; i < sys.rows.size(); ++i)
        g2.add_row(sys.rows[i].vars, -sys.rows[i].constant, i);
    const gf2::Result res = gf2::solve(g2);
    if (!res.feasible) return ILResult{true, std::nullopt};

    Certificate cert;
    cert.mode = CertMode::il;
    cert.ring = Ring::z2;
    cert.graph_hash = g.canonical_hash();
    for (auto v = res.solution.find_first(); v != Bitset::npos; v = res.solution.find_next(v))
        cert.entries.emplace_back(static_cast<std::uint32_t>(v), 1);
    return ILResult{false, std::move(cert)};
}

ZeroLinkingResult detect_zero_linking(const Graph& g, const PairwiseSystem& sys) {
    exact::System zsys;
    zsys.num_vars = g.var_count();
    for (std::uint32_t i = 0; i < sys.rows.size(); ++i) {
        std::vector<exact::Term> terms;
        terms.reserve(sys.rows[i].vars.size());
        for (std::uint32_t v : sys.rows[i].vars) terms.push_back(exact::Term{v, 1});
        zsys.add_row(std::move(terms), -sys.rows[i].constant, i);
    }
    const exact::IntegerResult res = exact::solve_integer(zsys);
    if (!res.feasible) return ZeroLinkingResult{false, std::nullopt};

    Certificate cert;
    cert.mode = CertMode::zero_linking;
    cert.ring = Ring::z;
    cert.graph_hash = g.canonical_hash();
    for (std::uint32_t v = 0; v < zsys.num_vars; ++v) {
        if (res.solution[v] == 0) continue;
        if (!res.solution[v].fits_slong_p())
            throw std::overflow_error("certificate entry exceeds 64 bits");
        cert.entries.emplace_back(v, static_cast<std::int64_t>(res.solution[v].get_si()));
    }
    return ZeroLinkingResult{true, std::move(cert)};
}

}  // namespace knotscan
