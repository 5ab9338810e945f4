/* knotscan C API: intrinsic knotting / linking detection for simple graphs.
 *
 * All functions return a ks_status; handles are opaque and owned by the
 * caller once returned. String results stay valid until their owning handle
 * is freed. ks_last_error() describes the most recent failure on the calling
 * thread.
 */
#ifndef KNOTSCAN_H
#define KNOTSCAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct ks_graph ks_graph;
typedef struct ks_result ks_result;
typedef struct ks_text ks_text;

typedef enum ks_status {
    KS_OK = 0,
    KS_ERR_PARSE = 1,    /* malformed graph or certificate input */
    KS_ERR_INVALID = 2,  /* bad argument or option combination */
    KS_ERR_INTERNAL = 3
} ks_status;

/* ------------------------------------------------------------------ graphs */

/* Edge-list text: lines of two whitespace-separated vertex labels; blank
 * lines and '#' comments ignored. */
ks_status ks_graph_from_edge_list(const char* text, ks_graph** out);

/* n lines of n characters over {0,1}; symmetric, zero diagonal. */
ks_status ks_graph_from_adjacency(const char* text, ks_graph** out);

/* Built-in families: "k7", "k33", "k3311", "petersen", "cube", ... */
ks_status ks_graph_generate(const char* name, ks_graph** out);

void ks_graph_free(ks_graph* g);

int ks_graph_vertex_count(const ks_graph* g);
int ks_graph_edge_count(const ks_graph* g);

/* -------------------------------------------------------------------- runs */

typedef struct ks_options {
    const char* mode;  /* "ik" (default), "il", "zero-linking" */
    const char* ring;  /* "z" (default) or "z2"; ik mode only */
    const char* quads; /* "all" (default) or "chordless"; ik mode only */
    int strict_witness;
    int paper_compat;
    int no_indispensable;
    int no_nogoods;
    double timeout_seconds; /* 0 = unlimited */
    int workers;            /* <= 1 = single-threaded */
} ks_options;

/* Fills in the defaults listed above. */
void ks_options_init(ks_options* opts);

ks_status ks_run(const ks_graph* g, const ks_options* opts, ks_result** out);

/* "IK", "D4LESS_Z", "D4LESS_Z2", "TIMEOUT", "IL", "NOT_IL", "FEASIBLE",
 * "INFEASIBLE". */
const char* ks_result_verdict(const ks_result* r);

/* Full report as JSON (verdict, certificate, statistics, timings). */
const char* ks_result_report_json(const ks_result* r);

/* Certificate alone as JSON, or NULL when the verdict carries none. */
const char* ks_result_certificate_json(const ks_result* r);

void ks_result_free(ks_result* r);

/* ------------------------------------------------------------ verification */

/* Accepts either a bare certificate or a full report. On KS_OK, *accepted is
 * 1 or 0; when rejected, ks_last_error() holds the reason. */
ks_status ks_verify_certificate(const ks_graph* g, const char* json_text, int* accepted);

/* ------------------------------------------------------------------- dumps */

/* Base-embedding JSON: exact rational vertex coordinates, signed crossings. */
ks_status ks_diagram_json(const ks_graph* g, ks_text** out);

/* Quads and equations JSON for auditing. quads is "all" or "chordless". */
ks_status ks_audit_json(const ks_graph* g, const char* quads, int strict_witness,
                        ks_text** out);

const char* ks_text_get(const ks_text* t);
void ks_text_free(ks_text* t);

/* ------------------------------------------------------------------ errors */

/* Message for the last failing call on this thread; empty if none. */
const char* ks_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* KNOTSCAN_H */
