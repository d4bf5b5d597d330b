#ifndef FOLKMAN_H
#define FOLKMAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#  define FOLKMAN_API __declspec(dllexport)
#else
#  define FOLKMAN_API __attribute__((visibility("default")))
#endif

/*
 * Every function returning folkman_status reports failure through the code;
 * folkman_last_error() then describes it. The message is per thread and
 * stays valid until the next failing call on that thread.
 *
 * Strings returned through char ** belong to the caller and are released
 * with folkman_string_free().
 */

typedef enum folkman_status {
    FOLKMAN_OK = 0,
    FOLKMAN_INVALID_ARGUMENT = 1,
    FOLKMAN_INVALID_GRAPH = 2,
    FOLKMAN_GRAPH6_ERROR = 3,
    FOLKMAN_CAPACITY_EXCEEDED = 4,
    FOLKMAN_PRECONDITION_VIOLATED = 5,
    FOLKMAN_STORE_ERROR = 6,
    FOLKMAN_MANIFEST_MISMATCH = 7,
    FOLKMAN_WITNESS_ERROR = 8,
    FOLKMAN_SOLVER_ERROR = 9,
    FOLKMAN_INTERNAL_ERROR = 10
} folkman_status;

typedef struct folkman_graph folkman_graph;
typedef struct folkman_store folkman_store;

typedef enum folkman_engine {
    FOLKMAN_ENGINE_SAT = 0,
    FOLKMAN_ENGINE_BACKTRACK = 1
} folkman_engine;

typedef struct folkman_arrow_options {
    folkman_engine engine;
    /* nonzero: decide with both built-in procedures and fail on disagreement */
    int cross_check;
    /* NULL or a command that takes a DIMACS file name and prints a verdict */
    const char *external_solver;
} folkman_arrow_options;

typedef struct folkman_invariants {
    int order;
    long edges;
    int clique_number;
    int independence_number;
    int chromatic_number;
    int min_degree;
    int max_degree;
    int plus_k3;
    int maximal_k4_free;
    int sperner;
} folkman_invariants;

FOLKMAN_API const char *folkman_version(void);
FOLKMAN_API const char *folkman_last_error(void);
FOLKMAN_API const char *folkman_status_name(folkman_status status);
FOLKMAN_API void folkman_string_free(char *text);
FOLKMAN_API void folkman_arrow_options_init(folkman_arrow_options *options);

/* Graphs. Orders above 64 are accepted wherever arrowing is the only use. */
FOLKMAN_API folkman_status folkman_graph_from_graph6(const char *line, folkman_graph **out);
/* pairs holds 2 * edge_count vertex numbers */
FOLKMAN_API folkman_status folkman_graph_from_edges(int order, const int *pairs, size_t edge_count, folkman_graph **out);
FOLKMAN_API void folkman_graph_free(folkman_graph *graph);
FOLKMAN_API int folkman_graph_order(const folkman_graph *graph);
FOLKMAN_API long folkman_graph_edge_count(const folkman_graph *graph);
FOLKMAN_API folkman_status folkman_graph_to_graph6(const folkman_graph *graph, char **out);
FOLKMAN_API folkman_status folkman_graph_canonical(const folkman_graph *graph, char **out);
FOLKMAN_API folkman_status folkman_graph_invariants(const folkman_graph *graph, folkman_invariants *out);
FOLKMAN_API folkman_status folkman_graph_join_complete(const folkman_graph *graph, int p, folkman_graph **out);

/* Arrowing. witness, when not NULL, receives a witness file text for a negative verdict and NULL otherwise. */
FOLKMAN_API folkman_status folkman_arrows_edge(const folkman_graph *graph, const folkman_arrow_options *options,
        int *arrows, char **witness);
FOLKMAN_API folkman_status folkman_arrows_vertex(const folkman_graph *graph, const int *targets, int target_count,
        int *arrows, char **colouring);
FOLKMAN_API folkman_status folkman_member_l(const folkman_graph *graph, int p, const folkman_arrow_options *options,
        int *member);
FOLKMAN_API folkman_status folkman_export_dimacs(const folkman_graph *graph, char **out);

/* expected_graph6 may be NULL. good is 1 when the colouring has no monochromatic triangle. */
FOLKMAN_API folkman_status folkman_verify_witness(const char *witness_text, const char *expected_graph6, int *good);

/* Stores of canonical graph6 keys. */
FOLKMAN_API folkman_status folkman_store_new(folkman_store **out);
/* canonical nonzero: the file is trusted to hold canonical keys; otherwise lines are canonicalised. */
FOLKMAN_API folkman_status folkman_store_load(const char *path, int canonical, int workers, folkman_store **out);
FOLKMAN_API void folkman_store_free(folkman_store *store);
FOLKMAN_API size_t folkman_store_size(const folkman_store *store);
FOLKMAN_API folkman_status folkman_store_insert(folkman_store *store, const folkman_graph *graph, int *inserted);
FOLKMAN_API folkman_status folkman_store_contains(const folkman_store *store, const folkman_graph *graph, int *found);
/* The keys in sorted order as one newline-terminated line each. */
FOLKMAN_API folkman_status folkman_store_serialise(const folkman_store *store, char **out);
FOLKMAN_API folkman_status folkman_store_save(const folkman_store *store, const char *path, char **digest);

/*
 * Runs one pipeline stage described by a JSON object:
 *   kind              generate | filter | extend | sperner | edges-down | bh-check | stats
 *   params            { n, p, s, s_exact, variant: plain | max | plusk3 }
 *   delta_mode, inputs, output, workers, engine (sat | backtrack), cross_check,
 *   external_solver, chi_filter, shard_size, generation_shards, max_depth
 * result receives { "manifest": ..., "skipped": bool }.
 */
FOLKMAN_API folkman_status folkman_run_stage(const char *plan_json, char **result);

/* Histograms of edges, minimum and maximum degree and independence number as JSON, aligned text and TSV. */
FOLKMAN_API folkman_status folkman_histograms(const char *store_path, int workers, char **json, char **text, char **tsv);

FOLKMAN_API folkman_status folkman_sha256_file(const char *path, char **digest);

#ifdef __cplusplus
}
#endif

#endif
