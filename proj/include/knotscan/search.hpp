#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "knotscan/linsys.hpp"
#include "knotscan/quads.hpp"

namespace knotscan {

enum class CertMode : std::uint8_t { ik, il, zero_linking };

inline const char* to_string(CertMode m) {
    switch (m) {
        case CertMode::ik: return "ik";
        case CertMode::il: return "il";
        default: return "zero-linking";
    }
}

// Crossing-change counts per nonadjacent edge pair; absent pairs are zero.
struct Certificate {
    CertMode mode = CertMode::ik;
    Ring ring = Ring::z;
    QuadMode quad_mode = QuadMode::all;
    bool strict_witness = false;
    std::uint64_t graph_hash = 0;
    std::vector<std::pair<std::uint32_t, std::int64_t>> entries;  // (var index, twists)
};

enum class SearchVerdict : std::uint8_t { ik, d4less_z, d4less_z2, timeout };

inline const char* to_string(SearchVerdict v) {
    switch (v) {
        case SearchVerdict::ik: return "IK";
        case SearchVerdict::d4less_z: return "D4LESS_Z";
        case SearchVerdict::d4less_z2: return "D4LESS_Z2";
        default: return "TIMEOUT";
    }
}

struct SearchOptions {
    Ring ring = Ring::z;
    bool use_indispensable = true;
    bool use_nogoods = true;
    // Accept an integer solution only when the free-variables-zero rational
    // solution happens to be integral, instead of deciding exactly.
    bool paper_compat = false;
    std::size_t nogood_cap = 4096;
    Deadline deadline;
};

struct SearchStats {
    std::uint64_t strings_examined = 0;
    mpz_class strings_skipped = 0;
    std::uint32_t indispensable_count = 0;
    std::uint64_t nogoods_recorded = 0;
    bool decided_in_preprocessing = false;
};

struct SearchResult {
    SearchVerdict verdict;
    std::optional<Certificate> certificate;
    SearchStats stats;
};

// Equations whose related set R(A) is infeasible in the given ring. Sets
// *early_ik when the accumulated indispensable system itself is infeasible.
std::vector<std::uint32_t> indispensable_equations(const EquationSet& eqs,
                                                   std::uint32_t num_vars, Ring ring,
                                                   bool* early_ik,
                                                   const Deadline& deadline = {});

// Lexicographic enumeration of valid selection strings with nogood skipping
// and the GF(2)-then-integer solving pipeline.
SearchResult search_d4less(const Graph& g, const EquationSet& eqs, const SearchOptions& opts);

// Recomputes both diagonal linking numbers of every quad from the link table
// and the certificate alone; accepts iff one diagonal vanishes per quad (mod 2
// for a Z2 certificate). Shares no code path with the solver beyond the table.
bool verify_quad_certificate(const Graph& g, const std::vector<Cycle>& cycles,
                             const std::vector<Quad>& quads, const LinkTable& table,
                             const Certificate& cert, std::string* reason = nullptr);

// For IL-style certificates: every disjoint cycle pair's linking number must
// become even (ring z2) or exactly zero (ring z).
bool verify_pairwise_certificate(const Graph& g, const std::vector<Cycle>& cycles,
                                 const LinkTable& table, const Certificate& cert,
                                 std::string* reason = nullptr);

}  // namespace knotscan
