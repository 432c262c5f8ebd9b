#ifndef GMIS_H
#define GMIS_H

/* C interface to the greedy MIS library. Every int-returning call returns
 * GMIS_OK or an error code; gmis_last_error() holds the message. Vertex ids
 * are 0-based. Strings returned through char** are freed with gmis_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gmis_graph gmis_graph;

enum {
  GMIS_OK = 0,
  GMIS_ERR_PARSE = 1,
  GMIS_ERR_OUT_OF_RANGE = 2,
  GMIS_ERR_CONTRACT = 3,
  GMIS_ERR_DEGREE_BOUND = 4,
  GMIS_ERR_BUDGET = 5,
  GMIS_ERR_IDENTITY = 6,
  GMIS_ERR_INVALID_ARGUMENT = 7,
  GMIS_ERR_INTERNAL = 8
};

enum {
  GMIS_ALGO_GREEDY = 0,
  GMIS_ALGO_MORE_EDGES = 1,
  GMIS_ALGO_GREEDY_STAR = 2,
  GMIS_ALGO_VC_COMPLEMENTARY = 3,
  GMIS_ALGO_VC_SIX_FIFTHS = 4
};

/* Message of the last failed call on this thread; "" if none. */
const char* gmis_last_error(void);
const char* gmis_error_name(int code);

/* "greedy", "more-edges", "greedy-star", "vc-complementary", "vc-65". */
int gmis_algo_from_name(const char* name, int* algo);
const char* gmis_algo_name(int algo);
/* Nonzero for the vertex cover algorithms. */
int gmis_algo_is_cover(int algo);

/* DIMACS edge format. `duplicate_edges` may be NULL. */
int gmis_graph_parse(const char* text, size_t len, gmis_graph** out, int* duplicate_edges);
/* `endpoints` holds 2*m ids. */
int gmis_graph_from_edges(int n, const int* endpoints, size_t m, gmis_graph** out);
void gmis_graph_free(gmis_graph* g);
int gmis_graph_n(const gmis_graph* g);
int64_t gmis_graph_m(const gmis_graph* g);
int gmis_graph_max_degree(const gmis_graph* g);
int gmis_graph_write(const gmis_graph* g, char** text);
void gmis_string_free(char* s);

/* Writes the sorted solution into `out` (room for n ids) and its size. */
int gmis_solve(const gmis_graph* g, int algo, int* out, int* size);

/* Oracles; max_nodes <= 0 keeps the default budget. `witness` may be NULL. */
int gmis_exact_mis(const gmis_graph* g, int64_t max_nodes, int* alpha, int* witness, int* witness_size);
int gmis_max_greedy(const gmis_graph* g, int64_t max_nodes, int* alpha_plus, int* alpha_minus);
int gmis_greedy_can_avoid(const gmis_graph* g, int v, int64_t max_nodes, int* avoidable);

/* Potential audit of an MIS algorithm's execution. `black` lists the
 * reference independent set; NULL uses an oracle maximum independent set.
 * `params_json` is {"gamma": "5", "sigma": "4", "delta": 3} (strings or
 * integers), or one of {"preset": "subcubic" | "general" | "triangle-free",
 * "delta": D}; NULL means subcubic. Output: one JSON line per reduction,
 * then one summary line. Identity violations return GMIS_ERR_IDENTITY. */
int gmis_audit(const gmis_graph* g, int algo, const int* black, int black_size,
               const char* params_json, char** jsonl);

/* Per-reduction Φ ≥ Ψ check for the greedy-star execution; JSON object. */
int gmis_duality_audit(const gmis_graph* g, const int* black, int black_size, char** json);

/* Minimum reduction potentials at (5, 4, 3); JSON object keyed by kind. */
int gmis_potential_table(int max_length, char** json);

/* part[v] = 0 (out), 1 (in) or 2 (half-integral kernel). */
int gmis_nt_partition(const gmis_graph* g, int* part);

/* Instance generator. `spec_json` is {"family": ..., params...}; families:
 * random, hy, delta-chain, hard-general, hard-bipartite, gadget, sat-anchor,
 * cycle. `input` is the cubic graph for "gadget" and NULL otherwise.
 * `sidecar` receives family, parameters and known values (may be NULL). */
int gmis_generate(const char* spec_json, const gmis_graph* input, gmis_graph** out, char** sidecar);

#ifdef __cplusplus
}
#endif

#endif
