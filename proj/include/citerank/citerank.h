/*
 * citerank C API.
 *
 * Every object is an opaque handle created by a *_read / *_run / *_from_*
 * call and released with the matching *_free. Functions return a cr_status;
 * on failure cr_last_error() holds a message for the calling thread until
 * its next failing call. Array outputs take a caller buffer and its length,
 * which must match the object's size.
 */
#ifndef CITERANK_H
#define CITERANK_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(CITERANK_BUILDING)
#    define CITERANK_API __declspec(dllexport)
#  else
#    define CITERANK_API __declspec(dllimport)
#  endif
#else
#  define CITERANK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cr_status {
  CR_OK = 0,
  CR_ERR_INVALID_ARGUMENT = 1,
  CR_ERR_IO = 2,
  CR_ERR_PARSE = 3,
  CR_ERR_DUPLICATE_ID = 4,
  CR_ERR_DEGENERATE = 5,
  CR_ERR_NUMERIC = 6,
  CR_ERR_NOT_FOUND = 7,
  CR_ERR_TOO_LARGE = 8,
  CR_ERR_INTERNAL = 9
} cr_status;

CITERANK_API const char* cr_version(void);
CITERANK_API const char* cr_last_error(void);
CITERANK_API const char* cr_status_name(cr_status status);

/* ---- citation networks ------------------------------------------------ */

typedef struct cr_network cr_network;

typedef struct cr_network_summary {
  size_t nodes;
  uint64_t citations;
  size_t edges;
  int self_loops_included;
} cr_network_summary;

/* Edge list CSV (source,target,weight); nodes_path may be NULL. */
CITERANK_API cr_status cr_network_read(const char* edges_path, const char* nodes_path, int keep_self_loops,
                                       cr_network** out);
CITERANK_API cr_status cr_network_from_edges(size_t node_count, const char* const* node_ids, size_t edge_count,
                                             const uint32_t* sources, const uint32_t* targets,
                                             const uint64_t* weights, int keep_self_loops, cr_network** out);
CITERANK_API void cr_network_free(cr_network* net);

CITERANK_API size_t cr_network_node_count(const cr_network* net);
/* NULL when i is out of range. Valid for the lifetime of net. */
CITERANK_API const char* cr_network_node_id(const cr_network* net, size_t i);
CITERANK_API cr_status cr_network_get_summary(const cr_network* net, cr_network_summary* out);
CITERANK_API cr_status cr_network_in_degree(const cr_network* net, uint32_t* out, size_t n);
CITERANK_API cr_status cr_network_degree_centrality(const cr_network* net, double* out, size_t n);

CITERANK_API cr_status cr_network_write_edges(const cr_network* net, const char* path);
CITERANK_API cr_status cr_network_write_nodes(const cr_network* net, const char* path);
CITERANK_API cr_status cr_network_write_centrality(const cr_network* net, const char* path);
/* publications < 0 leaves the count out of the summary. */
CITERANK_API cr_status cr_network_write_summary(const cr_network* net, const char* path, int64_t publications);

/* ---- subject profiles --------------------------------------------------- */

typedef enum cr_indicator { CR_PUB = 0, CR_CNCI = 1, CR_IC = 2, CR_TOP = 3, CR_AWD = 4 } cr_indicator;

typedef struct cr_profile cr_profile;

/* Built-in profiles: DEN, FIN, LIB, TEL, VET. */
CITERANK_API cr_status cr_profile_builtin(const char* name, cr_profile** out);
/* JSON profile config; see README for the layout. */
CITERANK_API cr_status cr_profile_load(const char* config_path, const char* name, cr_profile** out);
CITERANK_API void cr_profile_free(cr_profile* profile);

CITERANK_API const char* cr_profile_name(const cr_profile* profile);
CITERANK_API const char* cr_profile_category(const cr_profile* profile);
CITERANK_API long cr_profile_threshold(const cr_profile* profile);
CITERANK_API long cr_profile_weight(const cr_profile* profile, cr_indicator indicator);
CITERANK_API void cr_profile_years(const cr_profile* profile, int* first, int* last);
CITERANK_API cr_status cr_profile_set_threshold(cr_profile* profile, long threshold);
CITERANK_API cr_status cr_profile_set_years(cr_profile* profile, int first, int last);

/* ---- publication records ------------------------------------------------ */

typedef struct cr_records cr_records;

/* JSON Lines input. Lenient mode skips bad lines and records an issue for
 * each; strict mode fails on the first one. */
CITERANK_API cr_status cr_records_read(const char* path, int strict, cr_records** out);
CITERANK_API void cr_records_free(cr_records* records);
CITERANK_API size_t cr_records_count(const cr_records* records);
CITERANK_API size_t cr_records_issue_count(const cr_records* records);
CITERANK_API cr_status cr_records_issue(const cr_records* records, size_t i, size_t* line, const char** message);

typedef struct cr_build_stats {
  size_t matching_records;      /* category and year window */
  size_t retained_institutions; /* passing the threshold */
  size_t publications;          /* records with a retained affiliation */
} cr_build_stats;

/* Filter, threshold and aggregate into a network. stats may be NULL. */
CITERANK_API cr_status cr_records_build_network(const cr_records* records, const cr_profile* profile,
                                                int keep_self_loops, cr_network** out, cr_build_stats* stats);

/* ---- PageRank ----------------------------------------------------------- */

typedef enum cr_dangling_policy { CR_DANGLING_UNIFORM = 0, CR_DANGLING_TELEPORT_ONLY = 1 } cr_dangling_policy;

typedef struct cr_pagerank_config {
  double damping;
  double tolerance;
  size_t max_iterations;
  cr_dangling_policy dangling;
} cr_pagerank_config;

typedef struct cr_pagerank cr_pagerank;

/* damping 0.85, tolerance 1e-12, 1000 iterations, uniform redistribution. */
CITERANK_API void cr_pagerank_config_default(cr_pagerank_config* cfg);
CITERANK_API cr_status cr_pagerank_run(const cr_network* net, const cr_pagerank_config* cfg, cr_pagerank** out);
/* Dense direct solve, refused above 200 nodes. */
CITERANK_API cr_status cr_pagerank_dense(const cr_network* net, const cr_pagerank_config* cfg, double* out, size_t n);
CITERANK_API void cr_pagerank_free(cr_pagerank* pr);

CITERANK_API size_t cr_pagerank_size(const cr_pagerank* pr);
CITERANK_API cr_status cr_pagerank_scores(const cr_pagerank* pr, double* out, size_t n);
CITERANK_API size_t cr_pagerank_iterations(const cr_pagerank* pr);
CITERANK_API int cr_pagerank_converged(const cr_pagerank* pr);
CITERANK_API double cr_pagerank_final_delta(const cr_pagerank* pr);
/* rank,institution,pagerank_score,normalized_score */
CITERANK_API cr_status cr_pagerank_write_ranking(const cr_pagerank* pr, const cr_network* net, const char* path);

/* ---- scoring ------------------------------------------------------------ */

CITERANK_API cr_status cr_compress(const double* raw, size_t n, double* out);
CITERANK_API cr_status cr_normalize_pagerank(const double* scores, size_t n, double* out);

typedef struct cr_table cr_table;

/* institution,<column>... */
CITERANK_API cr_status cr_table_read(const char* path, cr_table** out);
CITERANK_API cr_status cr_table_write(const cr_table* table, const char* path);
CITERANK_API void cr_table_free(cr_table* table);
CITERANK_API size_t cr_table_rows(const cr_table* table);
CITERANK_API size_t cr_table_column_count(const cr_table* table);
CITERANK_API const char* cr_table_column_name(const cr_table* table, size_t i);
CITERANK_API cr_status cr_table_get_column(const cr_table* table, const char* name, double* out, size_t n);
CITERANK_API cr_status cr_table_set_column(cr_table* table, const char* name, const double* values, size_t n);
/* Compresses every raw indicator column with positive weight into
 * "<IND>_score" and writes the weighted composite to `column`. */
CITERANK_API cr_status cr_table_add_composite(cr_table* table, const cr_profile* profile, const char* column);

/* ---- comparison statistics --------------------------------------------- */

typedef struct cr_correlation {
  double r;
  double p;
} cr_correlation;

typedef struct cr_displacement {
  size_t n;
  double mean;
  double std;
  double p50;
  double p75;
  double p90;
} cr_displacement;

CITERANK_API cr_status cr_pearson(const double* x, const double* y, size_t n, cr_correlation* out);
CITERANK_API cr_status cr_spearman(const double* x, const double* y, size_t n, cr_correlation* out);
CITERANK_API cr_status cr_partial_correlation(const double* x, const double* y, const double* z, size_t n,
                                              cr_correlation* out);
/* rows: m x n row-major scores, one row per judge. */
CITERANK_API cr_status cr_kendall_w(const double* rows, size_t m, size_t n, double* out);
CITERANK_API cr_status cr_rank_displacement(const double* a, const double* b, size_t n, cr_displacement* out);

typedef struct cr_report cr_report;

CITERANK_API cr_status cr_compare(const cr_table* table, const char* column_a, const char* column_b,
                                  const char* const* controls, size_t control_count, cr_report** out);
CITERANK_API void cr_report_free(cr_report* report);
CITERANK_API cr_correlation cr_report_pearson(const cr_report* report);
CITERANK_API cr_correlation cr_report_spearman(const cr_report* report);
CITERANK_API double cr_report_kendall_w(const cr_report* report);
CITERANK_API cr_displacement cr_report_displacement(const cr_report* report);
CITERANK_API cr_status cr_report_partial(const cr_report* report, const char* control, cr_correlation* out);
CITERANK_API cr_status cr_report_write_json(const cr_report* report, const char* path);
CITERANK_API cr_status cr_report_write_csv(const cr_report* report, const char* path);

/* ---- PCA ---------------------------------------------------------------- */

typedef struct cr_pca cr_pca;

/* Labelled correlation matrix CSV: "variable,a,b,..." then one row each. */
CITERANK_API cr_status cr_pca_from_matrix_file(const char* path, size_t retain, cr_pca** out);
/* corr: p x p row-major; names may be NULL. */
CITERANK_API cr_status cr_pca_from_matrix(const double* corr, size_t p, const char* const* names, size_t retain,
                                          cr_pca** out);
/* Correlation matrix of the named table columns. */
CITERANK_API cr_status cr_pca_from_table(const cr_table* table, const char* const* columns, size_t column_count,
                                         size_t retain, cr_pca** out);
CITERANK_API void cr_pca_free(cr_pca* pca);
CITERANK_API size_t cr_pca_variable_count(const cr_pca* pca);
CITERANK_API size_t cr_pca_retained(const cr_pca* pca);
CITERANK_API cr_status cr_pca_eigenvalues(const cr_pca* pca, double* out, size_t n);
CITERANK_API cr_status cr_pca_explained_share(const cr_pca* pca, double* out, size_t n);
CITERANK_API cr_status cr_pca_rotated_share(const cr_pca* pca, double* out, size_t n);
/* p x retained row-major. */
CITERANK_API cr_status cr_pca_loadings(const cr_pca* pca, int rotated, double* out, size_t n);
/* Writes pca.json, eigenvalues.csv, loadings.csv, rotated_loadings.csv. */
CITERANK_API cr_status cr_pca_write(const cr_pca* pca, const char* directory);

/* ---- synthetic networks ------------------------------------------------- */

typedef struct cr_synth_config {
  size_t nodes;
  double attachment_exponent;
  double mean_out_citations;
  size_t cartel_members; /* 0: no cartel */
  double cartel_boost;
  uint64_t seed;
} cr_synth_config;

/* 100 nodes, exponent 1, 10 citations per node, no cartel, seed 1. */
CITERANK_API void cr_synth_config_default(cr_synth_config* cfg);
CITERANK_API cr_status cr_synth_generate(const cr_synth_config* cfg, cr_network** out);

#ifdef __cplusplus
}
#endif

#endif /* CITERANK_H */
