/* C interface of the ppgk library: public-private collaboration graphs,
 * their statistics, and shortest path and personalized PageRank queries.
 *
 * Handles are opaque and owned by the caller; release them with the matching
 * *_free function. Every fallible call returns a ppgk_status and leaves a
 * human-readable message for the calling thread in ppgk_last_error(). */
#ifndef PPGK_PPGK_H
#define PPGK_PPGK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PPGK_API __declspec(dllexport)
#else
#define PPGK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ppgk_status {
    PPGK_OK = 0,
    PPGK_INVALID_ARGUMENT = 1,
    PPGK_INVALID_VERTEX = 2,
    PPGK_PARSE = 3,
    PPGK_IO = 4,
    PPGK_UNDEFINED_OWNER = 5,
    PPGK_DIMENSION_MISMATCH = 6,
    PPGK_ZERO_VECTOR = 7,
    PPGK_CHECKSUM_MISMATCH = 8,
    PPGK_PARAMETER_MISMATCH = 9,
    PPGK_MISSING_ARTIFACT = 10,
    PPGK_NO_PRIVATE_OWNERS = 11,
    PPGK_INTERNAL = 99
} ppgk_status;

typedef enum ppgk_input_format { PPGK_INPUT_DBLP_XML = 0, PPGK_INPUT_FIXTURE = 1 } ppgk_input_format;

typedef enum ppgk_ppr_method {
    PPGK_PPR_POWER = 0,
    PPGK_PPR_PUSH = 1,
    PPGK_PPR_HEURISTIC = 2
} ppgk_ppr_method;

typedef enum ppgk_bench_task { PPGK_BENCH_SP = 0, PPGK_BENCH_PPR = 1 } ppgk_bench_task;

typedef struct ppgk_graph ppgk_graph;
typedef struct ppgk_sketches ppgk_sketches;
typedef struct ppgk_ppr_store ppgk_ppr_store;

typedef struct ppgk_stats {
    uint64_t vertices;
    uint64_t public_edges;
    uint64_t private_vertices;
    uint64_t private_edges;
    int has_delta; /* 0 when there are no private owners */
    double delta;
} ppgk_stats;

typedef struct ppgk_score {
    uint32_t vertex;
    double score;
} ppgk_score;

typedef struct ppgk_bench_options {
    ppgk_bench_task task;
    size_t queries;
    uint64_t seed;
    const double *factors; /* NULL keeps the default sweep 1, 0.5, 0.25 */
    size_t factor_count;
    double alpha;
    double eps;
    double store_eps;
    double tol;
    size_t top_k;
    unsigned repetitions;
    unsigned threads;
    int timing; /* 0 writes NA in runtime columns */
} ppgk_bench_options;

/* Message of the last failed call on this thread; never NULL. */
PPGK_API const char *ppgk_last_error(void);
PPGK_API const char *ppgk_status_name(ppgk_status status);
/* Frees strings returned through char ** out parameters. */
PPGK_API void ppgk_string_free(char *s);

/* Graph construction and storage. cutoff is YYYY-MM-DD; papers strictly
 * before it are public. */
PPGK_API ppgk_status ppgk_graph_generate(const char *input_path, ppgk_input_format format,
                                         const char *cutoff, ppgk_graph **out);
PPGK_API ppgk_status ppgk_graph_load(const char *dir, ppgk_graph **out);
PPGK_API ppgk_status ppgk_graph_save(const ppgk_graph *g, const char *dir);
PPGK_API void ppgk_graph_free(ppgk_graph *g);

PPGK_API size_t ppgk_graph_vertex_count(const ppgk_graph *g);
PPGK_API uint32_t ppgk_graph_checksum(const ppgk_graph *g);
/* Vertex id of an author name, or PPGK_INVALID_VERTEX. */
PPGK_API ppgk_status ppgk_graph_find(const ppgk_graph *g, const char *name, uint32_t *out);
PPGK_API ppgk_status ppgk_graph_stats(const ppgk_graph *g, ppgk_stats *out);
/* Two-line TSV with header, as printed by the command line tool. */
PPGK_API ppgk_status ppgk_graph_stats_tsv(const ppgk_graph *g, char **out);

/* Exact distance in the viewer's view; -1 when unreachable. */
PPGK_API ppgk_status ppgk_sp_exact(const ppgk_graph *g, uint32_t viewer, uint32_t source,
                                   uint32_t target, int64_t *out);

PPGK_API ppgk_status ppgk_sketches_build(const ppgk_graph *g, double factor, uint64_t seed,
                                         unsigned threads, ppgk_sketches **out);
PPGK_API ppgk_status ppgk_sketches_save(const ppgk_sketches *sk, const ppgk_graph *g,
                                        const char *path);
/* Fails with PPGK_MISSING_ARTIFACT, PPGK_CHECKSUM_MISMATCH or
 * PPGK_PARAMETER_MISMATCH when the file was not built for g, factor and seed. */
PPGK_API ppgk_status ppgk_sketches_load(const char *path, const ppgk_graph *g, double factor,
                                        uint64_t seed, ppgk_sketches **out);
PPGK_API void ppgk_sketches_free(ppgk_sketches *sk);
PPGK_API size_t ppgk_sketches_entry_count(const ppgk_sketches *sk);
/* Estimate in the viewer's view; -1 when the sketches give no estimate. */
PPGK_API ppgk_status ppgk_sp_sketch(const ppgk_sketches *sk, const ppgk_graph *g, uint32_t viewer,
                                    uint32_t source, uint32_t target, int64_t *out);

PPGK_API ppgk_status ppgk_ppr_store_build(const ppgk_graph *g, double alpha, double eps,
                                          unsigned threads, ppgk_ppr_store **out);
PPGK_API ppgk_status ppgk_ppr_store_save(const ppgk_ppr_store *store, const ppgk_graph *g,
                                         const char *path);
PPGK_API ppgk_status ppgk_ppr_store_load(const char *path, const ppgk_graph *g, double alpha,
                                         double eps, ppgk_ppr_store **out);
PPGK_API void ppgk_ppr_store_free(ppgk_ppr_store *store);

/* Personalized PageRank of source in its own view. param is the power
 * iteration tolerance or the push threshold; ignored by the heuristic, which
 * needs store (PPGK_MISSING_ARTIFACT without one). Writes up to capacity
 * entries in descending score order and the number written to *count. */
PPGK_API ppgk_status ppgk_ppr_query(const ppgk_graph *g, const ppgk_ppr_store *store,
                                    ppgk_ppr_method method, uint32_t source, double alpha,
                                    double param, ppgk_score *out, size_t capacity,
                                    size_t *count);

/* Fills defaults matching the command line tool. */
PPGK_API void ppgk_bench_options_init(ppgk_bench_options *opt);
/* CSV text with header; free with ppgk_string_free. */
PPGK_API ppgk_status ppgk_bench(const ppgk_graph *g, const ppgk_bench_options *opt, char **out);

#ifdef __cplusplus
}
#endif

#endif
