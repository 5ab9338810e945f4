// knotscan command line front end. Talks to the core exclusively through the
// C API in knotscan.h.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "knotscan.h"

namespace {

using Json = nlohmann::ordered_json;

struct GraphDeleter {
    void operator()(ks_graph* g) const { ks_graph_free(g); }
};
struct ResultDeleter {
    void operator()(ks_result* r) const { ks_result_free(r); }
};
struct TextDeleter {
    void operator()(ks_text* t) const { ks_text_free(t); }
};

int fail(const std::string& msg) {
    std::cerr << "knotscan: error: " << msg << "\n";
    return 1;
}

std::string read_file(const std::string& path, bool* ok) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        *ok = false;
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    *ok = true;
    return ss.str();
}

bool write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return false;
    out << content;
    return bool(out);
}

// Single-token rows of 0/1 characters mean an adjacency matrix.
bool looks_like_matrix(const std::string& text) {
    std::istringstream iss(text);
    std::string line;
    bool saw_row = false;
    while (std::getline(iss, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok, extra;
        if (!(ls >> tok)) continue;
        if (ls >> extra) return false;
        if (tok.find_first_not_of("01") != std::string::npos) return false;
        if (tok.size() < 2) return false;
        saw_row = true;
    }
    return saw_row;
}

std::string render_text_report(const Json& report) {
    std::ostringstream out;
    out << "verdict: " << report.at("verdict").get<std::string>() << "\n";
    const auto& graph = report.at("graph");
    out << "graph: " << graph.at("vertices") << " vertices, " << graph.at("edges")
        << " edges (hash " << graph.at("hash").get<std::string>() << ")\n";
    out << "mode: " << report.at("mode").get<std::string>();
    if (report.contains("ring"))
        out << "  ring: " << report.at("ring").get<std::string>()
            << "  quads: " << report.at("quads").get<std::string>();
    out << "\n";
    if (report.contains("certificateVerified"))
        out << "certificate: " << (report.at("certificateVerified").get<bool>()
                                       ? "verified"
                                       : "FAILED VERIFICATION")
            << " (" << report.at("certificate").at("entries").size() << " entries)\n";
    out << "stats:";
    for (const auto& [key, value] : report.at("stats").items())
        out << " " << key << "=" << value.dump();
    out << "\n";
    out << "timings:";
    for (const auto& [key, value] : report.at("timings").items())
        out << " " << key << "=" << value.dump();
    out << "\n";
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decides whether a simple graph is intrinsically knotted or linked and "
                 "emits crossing-change certificates"};
    app.get_formatter()->column_width(34);

    std::string input_path, gen_name, format = "auto";
    std::string mode = "ik", ring = "z", quads = "all", report_format = "text";
    std::string cert_path, cert_out, dump_diagram, dump_audit, report_out;
    bool strict_witness = false, paper_compat = false;
    bool no_indispensable = false, no_nogoods = false;
    double timeout_seconds = 0;
    int workers = 1;

    app.add_option("input", input_path, "graph file (edge list or adjacency matrix)");
    app.add_option("--gen", gen_name, "built-in graph: k7, k33, k3311, petersen, cube, ...");
    app.add_option("--format", format, "edges|matrix|auto (default auto)")
        ->check(CLI::IsMember({"edges", "matrix", "auto"}));
    app.add_option("--mode", mode, "ik|il|zero-linking|verify (default ik)")
        ->check(CLI::IsMember({"ik", "il", "zero-linking", "verify"}));
    app.add_option("--ring", ring, "z|z2 (ik mode, default z)")
        ->check(CLI::IsMember({"z", "z2"}));
    app.add_option("--quads", quads, "all|chordless (ik mode, default all)")
        ->check(CLI::IsMember({"all", "chordless"}));
    app.add_flag("--strict-witness", strict_witness,
                 "require degenerate witnesses to be disjoint too");
    app.add_flag("--paper-compat", paper_compat,
                 "accept integer solutions only when the rational solution is integral");
    app.add_flag("--no-indispensable", no_indispensable, "disable indispensable preprocessing");
    app.add_flag("--no-nogoods", no_nogoods, "disable infeasible-core skipping");
    app.add_option("--timeout", timeout_seconds, "budget in seconds (0 = unlimited)");
    app.add_option("--workers", workers, "worker threads for table/quad construction");
    app.add_option("--report", report_format, "text|json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--report-out", report_out, "also write the JSON report to a file");
    app.add_option("--certificate", cert_path, "certificate to check (verify mode)");
    app.add_option("--cert-out", cert_out, "write the emitted certificate to a file");
    app.add_option("--dump-diagram", dump_diagram, "write the base embedding JSON to a file");
    app.add_option("--dump-audit", dump_audit, "write quads and equations JSON to a file");

    CLI11_PARSE(app, argc, argv);

    if (input_path.empty() == gen_name.empty())
        return fail("provide exactly one of an input file or --gen");
    if (mode == "verify" && cert_path.empty())
        return fail("--mode verify requires --certificate");

    // Load the graph.
    ks_graph* graph_raw = nullptr;
    ks_status st;
    if (!gen_name.empty()) {
        st = ks_graph_generate(gen_name.c_str(), &graph_raw);
    } else {
        bool ok = false;
        const std::string text = read_file(input_path, &ok);
        if (!ok) return fail("cannot read input file '" + input_path + "'");
        const bool matrix = format == "matrix" || (format == "auto" && looks_like_matrix(text));
        st = matrix ? ks_graph_from_adjacency(text.c_str(), &graph_raw)
                    : ks_graph_from_edge_list(text.c_str(), &graph_raw);
    }
    if (st != KS_OK) return fail(std::string("malformed graph: ") + ks_last_error());
    std::unique_ptr<ks_graph, GraphDeleter> graph(graph_raw);

    if (!dump_diagram.empty()) {
        ks_text* t = nullptr;
        if (ks_diagram_json(graph.get(), &t) != KS_OK)
            return fail(std::string("diagram dump failed: ") + ks_last_error());
        std::unique_ptr<ks_text, TextDeleter> holder(t);
        if (!write_file(dump_diagram, ks_text_get(t)))
            return fail("cannot write '" + dump_diagram + "'");
    }
    if (!dump_audit.empty()) {
        ks_text* t = nullptr;
        if (ks_audit_json(graph.get(), quads.c_str(), strict_witness ? 1 : 0, &t) != KS_OK)
            return fail(std::string("audit dump failed: ") + ks_last_error());
        std::unique_ptr<ks_text, TextDeleter> holder(t);
        if (!write_file(dump_audit, ks_text_get(t)))
            return fail("cannot write '" + dump_audit + "'");
    }

    if (mode == "verify") {
        bool ok = false;
        const std::string cert_text = read_file(cert_path, &ok);
        if (!ok) return fail("cannot read certificate file '" + cert_path + "'");
        int accepted = 0;
        st = ks_verify_certificate(graph.get(), cert_text.c_str(), &accepted);
        if (st != KS_OK) return fail(std::string("malformed certificate: ") + ks_last_error());
        if (accepted) {
            std::cout << "certificate accepted\n";
            return 0;
        }
        std::cout << "certificate rejected: " << ks_last_error() << "\n";
        return 1;
    }

    ks_options opts;
    ks_options_init(&opts);
    opts.mode = mode.c_str();
    opts.ring = ring.c_str();
    opts.quads = quads.c_str();
    opts.strict_witness = strict_witness ? 1 : 0;
    opts.paper_compat = paper_compat ? 1 : 0;
    opts.no_indispensable = no_indispensable ? 1 : 0;
    opts.no_nogoods = no_nogoods ? 1 : 0;
    opts.timeout_seconds = timeout_seconds;
    opts.workers = workers;

    ks_result* result_raw = nullptr;
    st = ks_run(graph.get(), &opts, &result_raw);
    if (st != KS_OK) return fail(ks_last_error());
    std::unique_ptr<ks_result, ResultDeleter> result(result_raw);

    const std::string report = ks_result_report_json(result.get());
    if (!report_out.empty() && !write_file(report_out, report))
        return fail("cannot write '" + report_out + "'");
    if (!cert_out.empty()) {
        const char* cert = ks_result_certificate_json(result.get());
        if (!cert) return fail("verdict carries no certificate to write");
        if (!write_file(cert_out, cert)) return fail("cannot write '" + cert_out + "'");
    }

    if (report_format == "json") {
        std::cout << report << "\n";
    } else {
        std::cout << render_text_report(Json::parse(report));
    }

    const std::string verdict = ks_result_verdict(result.get());
    return verdict == "TIMEOUT" ? 2 : 0;
}
