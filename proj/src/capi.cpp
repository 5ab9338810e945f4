#include "knotscan.h"

#include <cstring>
#include <string>

#include "knotscan/engine.hpp"

using knotscan::Graph;

namespace {

thread_local std::string g_last_error;

template <typename F>
ks_status guarded(F&& f) {
    try {
        f();
        return KS_OK;
    } catch (const knotscan::ParseError& e) {
        g_last_error = e.what();
        return KS_ERR_PARSE;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return KS_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return KS_ERR_INTERNAL;
    }
}

bool parse_options(const ks_options* in, knotscan::RunOptions* out) {
    using knotscan::Mode;
    using knotscan::QuadMode;
    using knotscan::Ring;
    knotscan::RunOptions opts;
    if (in) {
        const std::string mode = in->mode ? in->mode : "ik";
        if (mode == "ik") opts.mode = Mode::ik;
        else if (mode == "il") opts.mode = Mode::il;
        else if (mode == "zero-linking") opts.mode = Mode::zero_linking;
        else {
            g_last_error = "unknown mode '" + mode + "'";
            return false;
        }
        const std::string ring = in->ring ? in->ring : "z";
        if (ring == "z") opts.ring = Ring::z;
        else if (ring == "z2") opts.ring = Ring::z2;
        else {
            g_last_error = "unknown ring '" + ring + "'";
            return false;
        }
        const std::string quads = in->quads ? in->quads : "all";
        if (quads == "all") opts.quad_mode = QuadMode::all;
        else if (quads == "chordless") opts.quad_mode = QuadMode::chordless;
        else {
            g_last_error = "unknown quad mode '" + quads + "'";
            return false;
        }
        opts.strict_witness = in->strict_witness != 0;
        opts.paper_compat = in->paper_compat != 0;
        opts.use_indispensable = in->no_indispensable == 0;
        opts.use_nogoods = in->no_nogoods == 0;
        opts.timeout_seconds = in->timeout_seconds;
        opts.workers = in->workers;
    }
    *out = opts;
    return true;
}

}  // namespace

struct ks_graph {
    Graph g;
};

struct ks_result {
    std::string verdict;
    std::string report;
    std::string certificate;  // empty when none
};

struct ks_text {
    std::string text;
};

extern "C" {

ks_status ks_graph_from_edge_list(const char* text, ks_graph** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    return guarded([&] { *out = new ks_graph{Graph::from_edge_list(text)}; });
}

ks_status ks_graph_from_adjacency(const char* text, ks_graph** out) {
    if (!text || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    return guarded([&] { *out = new ks_graph{Graph::from_adjacency_matrix(text)}; });
}

ks_status ks_graph_generate(const char* name, ks_graph** out) {
    if (!name || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    return guarded([&] { *out = new ks_graph{Graph::generate(name)}; });
}

void ks_graph_free(ks_graph* g) { delete g; }

int ks_graph_vertex_count(const ks_graph* g) {
    return g ? static_cast<int>(g->g.vertex_count()) : -1;
}

int ks_graph_edge_count(const ks_graph* g) {
    return g ? static_cast<int>(g->g.edge_count()) : -1;
}

void ks_options_init(ks_options* opts) {
    if (!opts) return;
    std::memset(opts, 0, sizeof *opts);
    opts->mode = "ik";
    opts->ring = "z";
    opts->quads = "all";
    opts->workers = 1;
}

ks_status ks_run(const ks_graph* g, const ks_options* opts, ks_result** out) {
    if (!g || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    knotscan::RunOptions ropts;
    if (!parse_options(opts, &ropts)) return KS_ERR_INVALID;
    return guarded([&] {
        const knotscan::RunResult rr = knotscan::run(g->g, ropts);
        auto* res = new ks_result;
        res->verdict = rr.verdict;
        res->report = knotscan::report_json(g->g, ropts, rr).dump(2);
        if (rr.certificate)
            res->certificate = knotscan::certificate_json(*rr.certificate, g->g).dump(2);
        *out = res;
    });
}

const char* ks_result_verdict(const ks_result* r) { return r ? r->verdict.c_str() : ""; }

const char* ks_result_report_json(const ks_result* r) { return r ? r->report.c_str() : ""; }

const char* ks_result_certificate_json(const ks_result* r) {
    return r && !r->certificate.empty() ? r->certificate.c_str() : nullptr;
}

void ks_result_free(ks_result* r) { delete r; }

ks_status ks_verify_certificate(const ks_graph* g, const char* json_text, int* accepted) {
    if (!g || !json_text || !accepted) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    return guarded([&] {
        const knotscan::VerifyOutcome out = knotscan::verify_certificate_text(g->g, json_text);
        *accepted = out.accepted ? 1 : 0;
        if (!out.accepted) g_last_error = out.reason;
    });
}

ks_status ks_diagram_json(const ks_graph* g, ks_text** out) {
    if (!g || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    return guarded([&] { *out = new ks_text{knotscan::diagram_json(g->g).dump(2)}; });
}

ks_status ks_audit_json(const ks_graph* g, const char* quads, int strict_witness,
                        ks_text** out) {
    if (!g || !out) {
        g_last_error = "null argument";
        return KS_ERR_INVALID;
    }
    const std::string qm = quads ? quads : "all";
    if (qm != "all" && qm != "chordless") {
        g_last_error = "unknown quad mode '" + qm + "'";
        return KS_ERR_INVALID;
    }
    return guarded([&] {
        *out = new ks_text{knotscan::audit_json(g->g, qm == "all" ? knotscan::QuadMode::all
                                                                  : knotscan::QuadMode::chordless,
                                                strict_witness != 0)
                               .dump(2)};
    });
}

const char* ks_text_get(const ks_text* t) { return t ? t->text.c_str() : ""; }

void ks_text_free(ks_text* t) { delete t; }

const char* ks_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
