#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "knotscan/il.hpp"
#include "knotscan/search.hpp"

namespace knotscan {

using Json = nlohmann::ordered_json;

enum class Mode : std::uint8_t { ik, il, zero_linking };

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::ik: return "ik";
        case Mode::il: return "il";
        default: return "zero-linking";
    }
}

struct RunOptions {
    Mode mode = Mode::ik;
    Ring ring = Ring::z;
    QuadMode quad_mode = QuadMode::all;
    bool strict_witness = false;
    bool paper_compat = false;
    bool use_indispensable = true;
    bool use_nogoods = true;
    double timeout_seconds = 0;
    int workers = 1;
};

struct RunResult {
    std::string verdict;  // IK | D4LESS_Z | D4LESS_Z2 | TIMEOUT | IL | NOT_IL | FEASIBLE | INFEASIBLE
    std::optional<Certificate> certificate;
    bool certificate_verified = false;

    std::uint64_t cycle_count = 0;
    std::uint64_t disjoint_pair_count = 0;
    std::uint64_t quad_count = 0;
    std::uint64_t equation_count = 0;
    SearchStats search;

    std::vector<std::pair<std::string, double>> timings_ms;
};

// Full pipeline: parse happens upstream; this runs cycles -> diagram ->
// link table -> (quads -> equations -> search | pairwise system) and
// self-verifies any emitted certificate.
RunResult run(const Graph& g, const RunOptions& opts);

Json report_json(const Graph& g, const RunOptions& opts, const RunResult& result);

Json certificate_json(const Certificate& cert, const Graph& g);

// Parses a certificate; throws ParseError on malformed structure. Edge pairs
// that do not name variables of g are reported through verify instead.
Certificate certificate_from_json(const Graph& g, const Json& j);

struct VerifyOutcome {
    bool accepted = false;
    std::string reason;
};

// Recomputes everything the certificate claims from scratch and checks it.
VerifyOutcome verify_certificate_text(const Graph& g, const std::string& json_text,
                                      int workers = 1);

// Base-embedding dump: exact rational vertex coordinates and signed crossings.
Json diagram_json(const Graph& g);

// Quads and equations dump for auditing.
Json audit_json(const Graph& g, QuadMode quad_mode, bool strict_witness, int workers = 1);

std::string hash_hex(std::uint64_t h);

}  // namespace knotscan
