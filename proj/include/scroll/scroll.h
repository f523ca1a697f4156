/*
 * scroll: exact invariants of binomial edge ideals on the generic 2 x n
 * Hankel matrix attached to closed (proper interval) graphs.
 *
 * C interface of the shared library. All computation results are returned
 * as JSON strings allocated by the library; release them with
 * scroll_string_free(). Every fallible call returns a scroll_status; on
 * failure, scroll_last_error() describes the problem for the calling
 * thread.
 */

#ifndef SCROLL_H
#define SCROLL_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct scroll_ctx scroll_ctx;     /* session: prime field, worker pool */
typedef struct scroll_graph scroll_graph; /* immutable closed graph */

typedef enum scroll_status {
  SCROLL_OK = 0,
  SCROLL_ERR_PARSE = 2,      /* malformed JSON, polynomial text, or option */
  SCROLL_ERR_VALIDATION = 3, /* input violates a domain invariant */
  SCROLL_ERR_INTERNAL = 4
} scroll_status;

const char* scroll_version(void);

/* Message of the most recent failure on this thread; never NULL. */
const char* scroll_last_error(void);

void scroll_string_free(char* s);

/* prime <= 0 selects the default prime 32003. */
scroll_status scroll_ctx_new(long long prime, scroll_ctx** out);
void scroll_ctx_free(scroll_ctx* ctx);
long long scroll_ctx_prime(const scroll_ctx* ctx);

/* Graph JSON: {"n": N, "cliques": [[a,b],...]} or {"n": N, "edges":
 * [[i,j],...]}; exactly one of the two keys. */
scroll_status scroll_graph_parse(const char* json, scroll_graph** out);
void scroll_graph_free(scroll_graph* g);
scroll_status scroll_graph_to_json(const scroll_graph* g, char** out_json);
int scroll_graph_vertex_count(const scroll_graph* g);

/* Full per-graph report; set with_betti to include the Betti table. */
scroll_status scroll_analyze(const scroll_ctx* ctx, const scroll_graph* g,
                             int with_betti, char** out_json);

/* Edge-ideal generators, optionally Artinian-reduced. */
scroll_status scroll_ideal(const scroll_ctx* ctx, const scroll_graph* g,
                           int artinian, char** out_json);

/* Reduced Groebner basis of the graph's ideal. */
scroll_status scroll_groebner_graph(const scroll_ctx* ctx, const scroll_graph* g,
                                    int artinian, char** out_json);

/* Reduced Groebner basis of an explicit ideal: {"nvars": k, "var_ids":
 * [...], "generators": ["x2^2 - x1*x3", ...]}. */
scroll_status scroll_groebner(const scroll_ctx* ctx, const char* ideal_json,
                              char** out_json);

/* h-vector, regularity, clique count, maximal-regularity verdict, witness
 * monomial. */
scroll_status scroll_hilbert(const scroll_ctx* ctx, const scroll_graph* g,
                             char** out_json);

/* Graded Betti numbers of S/I_G (or of the initial-ideal quotient when
 * monomial_side is nonzero). */
scroll_status scroll_betti(const scroll_ctx* ctx, const scroll_graph* g,
                           int monomial_side, char** out_json);

/* method: "socle", "criterion", "betti", or "both" (NULL = "both"). */
scroll_status scroll_gorenstein(const scroll_ctx* ctx, const scroll_graph* g,
                                const char* method, char** out_json);

/* All closed graphs on [n] as rows of headline invariants. */
scroll_status scroll_enumerate(const scroll_ctx* ctx, int n, int connected_only,
                               int gorenstein_only, char** out_json);

/* suite: "maxreg", "gorenstein", "betti", "structural", "fixtures", or
 * "all". n_max <= 0 selects the per-suite default. out_all_pass (optional)
 * receives 1 iff no counterexample was found. */
scroll_status scroll_verify(const scroll_ctx* ctx, const char* suite, int n_max,
                            char** out_json, int* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif /* SCROLL_H */
