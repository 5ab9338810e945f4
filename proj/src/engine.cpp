#include "knotscan/engine.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>

namespace knotscan {

namespace {

class PhaseClock {
public:
    explicit PhaseClock(std::vector<std::pair<std::string, double>>* out) : out_(out) {
        last_ = std::chrono::steady_clock::now();
    }
    void mark(const std::string& phase) {
        const auto now = std::chrono::steady_clock::now();
        out_->emplace_back(phase,
                           std::chrono::duration<double, std::milli>(now - last_).count());
        last_ = now;
    }

private:
    std::vector<std::pair<std::string, double>>* out_;
    std::chrono::steady_clock::time_point last_;
};

Certificate finish_cert(Certificate cert, CertMode mode, const Graph& g,
                        const RunOptions& opts) {
    cert.mode = mode;
    cert.quad_mode = opts.quad_mode;
    cert.strict_witness = opts.strict_witness;
    cert.graph_hash = g.canonical_hash();
    return cert;
}

}  // namespace

std::string hash_hex(std::uint64_t h) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
    return buf;
}

RunResult run(const Graph& g, const RunOptions& opts) {
    RunResult res;
    PhaseClock clock(&res.timings_ms);
    const Deadline deadline = Deadline::after_seconds(opts.timeout_seconds);

    const std::vector<Cycle> cycles = enumerate_cycles(g);
    res.cycle_count = cycles.size();
    clock.mark("cycles");

    const Diagram diagram = Diagram::canonical(g);
    const LinkTable table = LinkTable::build(diagram, cycles, opts.workers);
    res.disjoint_pair_count = table.size();
    clock.mark("diagram");

    if (opts.mode == Mode::il) {
        const PairwiseSystem sys = build_pairwise_system(g, cycles, table);
        ILResult il = detect_il(g, sys);
        res.verdict = il.intrinsically_linked ? "IL" : "NOT_IL";
        if (il.certificate) {
            res.certificate = std::move(il.certificate);
            res.certificate_verified =
                verify_pairwise_certificate(g, cycles, table, *res.certificate);
        }
        clock.mark("solve");
        return res;
    }
    if (opts.mode == Mode::zero_linking) {
        const PairwiseSystem sys = build_pairwise_system(g, cycles, table);
        ZeroLinkingResult zl = detect_zero_linking(g, sys);
        res.verdict = zl.feasible ? "FEASIBLE" : "INFEASIBLE";
        if (zl.certificate) {
            res.certificate = std::move(zl.certificate);
            res.certificate_verified =
                verify_pairwise_certificate(g, cycles, table, *res.certificate);
        }
        clock.mark("solve");
        return res;
    }

    // ik mode
    const IntersectionOracle oracle(g, cycles, opts.workers);
    QuadOptions qopts;
    qopts.chordless_only = opts.quad_mode == QuadMode::chordless;
    qopts.strict_witness = opts.strict_witness;
    qopts.workers = opts.workers;
    qopts.deadline = deadline;
    std::vector<Quad> quads;
    try {
        quads = enumerate_quads(g, cycles, oracle, qopts);
    } catch (const Timeout&) {
        res.verdict = "TIMEOUT";
        clock.mark("quads");
        return res;
    }
    res.quad_count = quads.size();
    const EquationSet eqs = build_equations(g, cycles, quads, table);
    res.equation_count = eqs.size();
    clock.mark("quads");

    SearchOptions sopts;
    sopts.ring = opts.ring;
    sopts.use_indispensable = opts.use_indispensable;
    sopts.use_nogoods = opts.use_nogoods;
    sopts.paper_compat = opts.paper_compat;
    sopts.deadline = deadline;
    SearchResult sr = search_d4less(g, eqs, sopts);
    res.search = sr.stats;
    res.verdict = to_string(sr.verdict);
    if (sr.certificate) {
        res.certificate = finish_cert(std::move(*sr.certificate), CertMode::ik, g, opts);
        res.certificate_verified =
            verify_quad_certificate(g, cycles, quads, table, *res.certificate);
    }
    clock.mark("search");
    return res;
}

Json certificate_json(const Certificate& cert, const Graph& g) {
    Json j;
    j["mode"] = to_string(cert.mode);
    j["ring"] = to_string(cert.ring);
    if (cert.mode == CertMode::ik) {
        j["quads"] = to_string(cert.quad_mode);
        j["strictWitness"] = cert.strict_witness;
    }
    j["graphHash"] = hash_hex(cert.graph_hash);
    Json entries = Json::array();
    for (const auto& [var, twists] : cert.entries) {
        const auto& [e, f] = g.nonadjacent_edge_pairs()[var];
        entries.push_back(Json{{"edgePair", {e, f}}, {"twists", twists}});
    }
    j["entries"] = std::move(entries);
    return j;
}

Certificate certificate_from_json(const Graph& g, const Json& j) {
    Certificate cert;
    try {
        const std::string mode = j.at("mode").get<std::string>();
        if (mode == "ik") cert.mode = CertMode::ik;
        else if (mode == "il") cert.mode = CertMode::il;
        else if (mode == "zero-linking") cert.mode = CertMode::zero_linking;
        else throw ParseError(0, "unknown certificate mode '" + mode + "'");

        const std::string ring = j.at("ring").get<std::string>();
        if (ring == "z") cert.ring = Ring::z;
        else if (ring == "z2") cert.ring = Ring::z2;
        else throw ParseError(0, "unknown certificate ring '" + ring + "'");

        if (cert.mode == CertMode::ik) {
            const std::string qm = j.value("quads", "all");
            if (qm == "all") cert.quad_mode = QuadMode::all;
            else if (qm == "chordless") cert.quad_mode = QuadMode::chordless;
            else throw ParseError(0, "unknown certificate quad mode '" + qm + "'");
            cert.strict_witness = j.value("strictWitness", false);
        }

        cert.graph_hash = std::stoull(j.at("graphHash").get<std::string>(), nullptr, 16);

        for (const auto& entry : j.at("entries")) {
            const auto pair = entry.at("edgePair");
            if (!pair.is_array() || pair.size() != 2)
                throw ParseError(0, "certificate edgePair must be a pair of edge indices");
            const std::int64_t e = pair[0].get<std::int64_t>();
            const std::int64_t f = pair[1].get<std::int64_t>();
            const std::int64_t twists = entry.at("twists").get<std::int64_t>();
            std::int32_t var = -1;
            const auto m = static_cast<std::int64_t>(g.edge_count());
            if (e >= 0 && f >= 0 && e < m && f < m)
                var = g.var_index(static_cast<std::uint32_t>(e), static_cast<std::uint32_t>(f));
            if (var < 0)
                // Signal a universe mismatch; the verifier rejects it.
                cert.entries.emplace_back(g.var_count(), twists);
            else
                cert.entries.emplace_back(static_cast<std::uint32_t>(var), twists);
        }
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
    return cert;
}

VerifyOutcome verify_certificate_text(const Graph& g, const std::string& json_text,
                                      int workers) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const Json::exception& e) {
        throw ParseError(0, std::string("malformed certificate: ") + e.what());
    }
    // A full report is accepted too; its certificate block is what counts.
    if (j.contains("certificate") && j["certificate"].is_object()) j = j["certificate"];
    const Certificate cert = certificate_from_json(g, j);

    VerifyOutcome out;
    const std::vector<Cycle> cycles = enumerate_cycles(g);
    const Diagram diagram = Diagram::canonical(g);
    const LinkTable table = LinkTable::build(diagram, cycles, workers);
    if (cert.mode == CertMode::ik) {
        const IntersectionOracle oracle(g, cycles, workers);
        QuadOptions qopts;
        qopts.chordless_only = cert.quad_mode == QuadMode::chordless;
        qopts.strict_witness = cert.strict_witness;
        qopts.workers = workers;
        const std::vector<Quad> quads = enumerate_quads(g, cycles, oracle, qopts);
        out.accepted = verify_quad_certificate(g, cycles, quads, table, cert, &out.reason);
    } else {
        out.accepted = verify_pairwise_certificate(g, cycles, table, cert, &out.reason);
    }
    return out;
}

Json report_json(const Graph& g, const RunOptions& opts, const RunResult& result) {
    Json j;
    j["tool"] = "knotscan";
    j["mode"] = to_string(opts.mode);
    if (opts.mode == Mode::ik) {
        j["ring"] = to_string(opts.ring);
        j["quads"] = to_string(opts.quad_mode);
        j["strictWitness"] = opts.strict_witness;
        j["paperCompat"] = opts.paper_compat;
    }
    j["graph"] = Json{{"vertices", g.vertex_count()},
                      {"edges", g.edge_count()},
                      {"hash", hash_hex(g.canonical_hash())}};
    j["verdict"] = result.verdict;
    if (result.certificate) {
        j["certificate"] = certificate_json(*result.certificate, g);
        j["certificateVerified"] = result.certificate_verified;
    }

    Json stats;
    stats["cycles"] = result.cycle_count;
    stats["disjointCyclePairs"] = result.disjoint_pair_count;
    if (opts.mode == Mode::ik) {
        stats["quads"] = result.quad_count;
        stats["equations"] = result.equation_count;
        stats["indispensable"] = result.search.indispensable_count;
        stats["stringsExamined"] = result.search.strings_examined;
        stats["stringsSkipped"] = result.search.strings_skipped.get_str();
        stats["nogoodsRecorded"] = result.search.nogoods_recorded;
        stats["decidedInPreprocessing"] = result.search.decided_in_preprocessing;
    }
    j["stats"] = std::move(stats);

    Json timings;
    double total = 0;
    for (const auto& [phase, ms] : result.timings_ms) {
        timings[phase + "Ms"] = ms;
        total += ms;
    }
    timings["totalMs"] = total;
    j["timings"] = std::move(timings);
    return j;
}

Json diagram_json(const Graph& g) {
    const Diagram d = Diagram::canonical(g);
    Json j;
    Json vertices = Json::array();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        const auto [x, y] = d.position(v);
        vertices.push_back(Json{{"index", v},
                                {"label", g.label(v)},
                                {"x", x.get_str()},
                                {"y", y.get_str()}});
    }
    j["vertices"] = std::move(vertices);
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    j["edges"] = std::move(edges);
    Json crossings = Json::array();
    for (const Crossing& c : d.crossings())
        crossings.push_back(
            Json{{"under", c.under_edge}, {"over", c.over_edge}, {"sign", c.sign}});
    j["crossings"] = std::move(crossings);
    return j;
}

Json audit_json(const Graph& g, QuadMode quad_mode, bool strict_witness, int workers) {
    const std::vector<Cycle> cycles = enumerate_cycles(g);
    const Diagram diagram = Diagram::canonical(g);
    const LinkTable table = LinkTable::build(diagram, cycles, workers);
    const IntersectionOracle oracle(g, cycles, workers);
    QuadOptions qopts;
    qopts.chordless_only = quad_mode == QuadMode::chordless;
    qopts.strict_witness = strict_witness;
    qopts.workers = workers;
    const std::vector<Quad> quads = enumerate_quads(g, cycles, oracle, qopts);
    const EquationSet eqs = build_equations(g, cycles, quads, table);

    Json j;
    j["quadMode"] = to_string(quad_mode);
    j["strictWitness"] = strict_witness;
    Json jc = Json::array();
    for (const Cycle& c : cycles) jc.push_back(c.vertex_seq);
    j["cycles"] = std::move(jc);
    Json jq = Json::array();
    for (const Quad& q : quads) {
        Json w = Json::array();
        for (const QuadWitness& qw : q.witnesses)
            w.push_back(Json{{"degenerate", qw.degenerate}, {"path", qw.path}});
        jq.push_back(Json{{"cycles", q.cycles}, {"witnesses", std::move(w)}});
    }
    j["quads"] = std::move(jq);
    Json je = Json::array();
    for (const Equation& eq : eqs.equations) {
        Json vars = Json::array();
        for (std::uint32_t v : eq.vars) {
            const auto& [e, f] = g.nonadjacent_edge_pairs()[v];
            vars.push_back(Json::array({e, f}));
        }
        je.push_back(Json{{"cyclePair", {eq.cycle_a, eq.cycle_b}},
                          {"variables", std::move(vars)},
                          {"constant", eq.constant}});
    }
    j["equations"] = std::move(je);
    Json jr = Json::array();
    for (const auto& [a, b] : eqs.related_pairs) jr.push_back(Json::array({a, b}));
    j["relatedPairs"] = std::move(jr);
    return j;
}

}  // namespace knotscan
