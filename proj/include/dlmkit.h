/*
 * dlmkit C API: exact distance-Laplacian spectra of small graphs, family
 * constructors, connected-graph enumeration, and theorem-verification
 * sweeps, behind opaque handles.
 *
 * Conventions:
 *   - Functions returning dlm_status report DLM_OK (0) on success; on any
 *     other code the output parameters are untouched and dlm_last_error()
 *     holds a message (thread-local).
 *   - Strings returned through char** are heap-allocated; release them with
 *     dlm_string_free. Handles are released with their matching _free call.
 *   - Graphs are simple and undirected with at most 64 vertices; graph6 is
 *     the interchange text format.
 */
#ifndef DLMKIT_H
#define DLMKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DLM_API __declspec(dllexport)
#else
#define DLM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dlm_status {
    DLM_OK = 0,
    DLM_ERR_INVALID_ARGUMENT = 1,
    DLM_ERR_PARSE = 2,
    DLM_ERR_DISCONNECTED = 3,
    DLM_ERR_DIAMETER = 4,
    DLM_ERR_NO_CONVERGENCE = 5,
    DLM_ERR_IO = 6,
    DLM_ERR_INTERNAL = 7
} dlm_status;

typedef struct dlm_graph dlm_graph;
typedef struct dlm_graph_iter dlm_graph_iter;
typedef struct dlm_spectrum dlm_spectrum;
typedef struct dlm_report dlm_report;

DLM_API const char* dlm_version(void);
DLM_API const char* dlm_last_error(void);
DLM_API void dlm_string_free(char* s);

/* ---- graphs ---- */

DLM_API dlm_status dlm_graph_from_g6(const char* line, dlm_graph** out);
/* endpoints holds 2*edge_count vertex ids: u0,v0,u1,v1,... */
DLM_API dlm_status dlm_graph_from_edges(int n, const int* endpoints, size_t edge_count,
                                        dlm_graph** out);
DLM_API dlm_status dlm_graph_to_g6(const dlm_graph* g, char** out);
DLM_API void dlm_graph_free(dlm_graph* g);

DLM_API int dlm_graph_order(const dlm_graph* g);
DLM_API int dlm_graph_edge_count(const dlm_graph* g);
DLM_API int dlm_graph_is_connected(const dlm_graph* g);
DLM_API int dlm_graph_component_count(const dlm_graph* g);
/* -1 when disconnected. */
DLM_API int dlm_graph_diameter(const dlm_graph* g);
/* out must hold n entries. Fails on disconnected input. */
DLM_API dlm_status dlm_graph_transmissions(const dlm_graph* g, int64_t* out);

DLM_API dlm_status dlm_graph_complement(const dlm_graph* g, dlm_graph** out);
DLM_API dlm_status dlm_graph_join(const dlm_graph* a, const dlm_graph* b, dlm_graph** out);
DLM_API dlm_status dlm_graph_disjoint_union(const dlm_graph* a, const dlm_graph* b,
                                            dlm_graph** out);
DLM_API dlm_status dlm_graph_induced(const dlm_graph* g, const int* vertices, size_t count,
                                     dlm_graph** out);
/* graph6 of the canonical (isomorphism-invariant) labeling, n <= 10. */
DLM_API dlm_status dlm_graph_canonical_g6(const dlm_graph* g, char** out);
DLM_API int dlm_graph_isomorphic(const dlm_graph* a, const dlm_graph* b);

/* ---- patterns ---- */

/* name: P4 P5 I1..I5 J1 J2 J3 */
DLM_API dlm_status dlm_pattern(const char* name, dlm_graph** out);
DLM_API int dlm_graph_contains_induced(const dlm_graph* g, const dlm_graph* pattern);
DLM_API int dlm_graph_is_cograph(const dlm_graph* g);
/* Returns 1 and fills a, b when g is a J(a,b); 0 otherwise. */
DLM_API int dlm_graph_j_recognize(const dlm_graph* g, int* a, int* b);

/* ---- families ---- */

/*
 * name: complete | path | cycle | star | complete-multipartite |
 *       star-plus-edge | balanced-bipartite-plus-edge | k2-join-empty |
 *       k1-join-balanced-bipartite | balanced-tripartite | j-graph
 * j-graph takes (a, b) and ignores n; complete-multipartite reads part
 * sizes from parts/part_count; the rest use n.
 */
DLM_API dlm_status dlm_graph_family(const char* name, int n, int a, int b, const int* parts,
                                    size_t part_count, dlm_graph** out);
/* The classified n-3 class members for n >= 6. */
DLM_API dlm_status dlm_family_classified(int n, dlm_graph_iter** out);
/* The exhaustively determined members for n = 4 or 5. */
DLM_API dlm_status dlm_family_small_n(int n, dlm_graph_iter** out);

/* ---- enumeration ---- */

DLM_API dlm_status dlm_enumerate_connected(int n, dlm_graph_iter** out);
/* 1 while a graph was produced, 0 at the end of the stream. */
DLM_API int dlm_graph_iter_next(dlm_graph_iter* it, dlm_graph** out);
DLM_API void dlm_graph_iter_free(dlm_graph_iter* it);

/* ---- spectra ---- */

/* matrix: "dl" (distance Laplacian; connected input) or "l" (Laplacian). */
DLM_API dlm_status dlm_spectrum_compute(const dlm_graph* g, const char* matrix,
                                        dlm_spectrum** out);
DLM_API void dlm_spectrum_free(dlm_spectrum* s);

DLM_API int dlm_spectrum_order(const dlm_spectrum* s);
DLM_API int dlm_spectrum_distinct_count(const dlm_spectrum* s);
/* Entries are indexed 0..distinct_count-1 in descending eigenvalue order. */
DLM_API int dlm_spectrum_multiplicity(const dlm_spectrum* s, int i);
DLM_API int dlm_spectrum_root_is_integer(const dlm_spectrum* s, int i);
DLM_API dlm_status dlm_spectrum_root_integer(const dlm_spectrum* s, int i, int64_t* out);
DLM_API double dlm_spectrum_root_approx(const dlm_spectrum* s, int i);
/* Exact rational endpoints of the isolating interval, as decimal fractions. */
DLM_API dlm_status dlm_spectrum_root_interval(const dlm_spectrum* s, int i, char** lo, char** hi);
/* Comma-separated exact characteristic polynomial coefficients, low first. */
DLM_API dlm_status dlm_spectrum_char_poly(const dlm_spectrum* s, char** out);
/* format: text | json | csv */
DLM_API dlm_status dlm_spectrum_render(const dlm_spectrum* s, const char* format, char** out);
/* Exact multiset equality. */
DLM_API int dlm_spectrum_equal(const dlm_spectrum* a, const dlm_spectrum* b);

/* ---- verification ---- */

typedef struct dlm_verify_opts {
    int n;                   /* order for thm33/properties/cospectral */
    int max_n;               /* cap for formulas (0 -> 14) */
    uint64_t seed;           /* sampled suites */
    int samples;             /* sample budget (0 -> 1000) */
    int workers;             /* worker threads (0 -> 1) */
    const char* corpus_path; /* optional graph6 file instead of enumeration */
    int connected_only;      /* nonzero: drop disconnected corpus lines */
    const char* cache_dir;   /* optional sweep cache directory */
} dlm_verify_opts;

/* kind: thm33 | remark45 | formulas | properties | cospectral */
DLM_API dlm_status dlm_verify_run(const char* kind, const dlm_verify_opts* opts,
                                  dlm_report** out);
DLM_API int dlm_report_passed(const dlm_report* r);
/* format: text | json | csv */
DLM_API dlm_status dlm_report_render(const dlm_report* r, const char* format, char** out);
DLM_API void dlm_report_free(dlm_report* r);

#ifdef __cplusplus
}
#endif

#endif /* DLMKIT_H */
