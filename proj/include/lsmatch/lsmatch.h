// Copyright 2026 The lsmatch Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to lsmatch: matching-size estimation from locally superior
 * vertices, the vertex-arrival streaming algorithm and the simultaneous
 * vertex-partition protocol simulator.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an lsm_status; on failure lsm_last_error() describes
 * the problem. Reports are returned as JSON strings owned by the caller and
 * released with lsm_string_free().
 */
#ifndef LSMATCH_LSMATCH_H_
#define LSMATCH_LSMATCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(LSMATCH_BUILDING_LIBRARY)
#define LSMATCH_API __attribute__((visibility("default")))
#else
#define LSMATCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lsm_status {
  LSM_OK = 0,
  LSM_ERR_INPUT = 1,      /* argument outside the operation's domain */
  LSM_ERR_FORMAT = 2,     /* unreadable or malformed graph/stream input */
  LSM_ERR_CAPABILITY = 3, /* exhaustive oracle size limit exceeded */
  LSM_ERR_INTERNAL = 4
} lsm_status;

typedef struct lsm_graph lsm_graph;

LSMATCH_API const char* lsm_version(void);

/* Message for the last failed call on this thread. Never NULL. */
LSMATCH_API const char* lsm_last_error(void);

LSMATCH_API void lsm_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

/* endpoints holds 2 * edge_count vertex ids. */
LSMATCH_API lsm_status lsm_graph_from_edges(uint32_t n,
                                            const uint32_t* endpoints,
                                            size_t edge_count,
                                            lsm_graph** out);
/* Edge-list text ("n m" header, one "u v" per line, '#' comments). */
LSMATCH_API lsm_status lsm_graph_parse(const char* text, lsm_graph** out);
LSMATCH_API lsm_status lsm_graph_load(const char* path, lsm_graph** out);
/* Vertex-arrival stream file; the stream is validated while it is read. */
LSMATCH_API lsm_status lsm_graph_load_stream(const char* path,
                                             lsm_graph** out);

/* family: path, cycle, star, grid, stacked-triangulation, forest-union,
 * named-example. alpha is used by forest-union only. */
LSMATCH_API lsm_status lsm_graph_generate(const char* family, uint32_t n,
                                          uint32_t alpha, uint64_t seed,
                                          lsm_graph** out);
LSMATCH_API void lsm_graph_free(lsm_graph* g);

LSMATCH_API uint32_t lsm_graph_vertex_count(const lsm_graph* g);
LSMATCH_API size_t lsm_graph_edge_count(const lsm_graph* g);
LSMATCH_API lsm_status lsm_graph_degree(const lsm_graph* g, uint32_t v,
                                        uint32_t* out);
LSMATCH_API lsm_status lsm_graph_is_locally_superior(const lsm_graph* g,
                                                     uint32_t v, int* out);

/* Edge-list text. Generated graphs carry a comment header with family, n,
 * seed and arboricity witness. */
LSMATCH_API lsm_status lsm_graph_to_text(const lsm_graph* g, char** out);
LSMATCH_API lsm_status lsm_graph_save(const lsm_graph* g, const char* path);

/* ---- exact oracles ------------------------------------------------------ */

typedef struct lsm_exact_stats {
  uint64_t max_matching;       /* m(G), blossom algorithm */
  uint64_t locally_superior;   /* l(G) */
  int64_t a_prime_half_units;  /* A'(G) * 2 */
  uint32_t degeneracy;
  uint32_t witness_alpha;      /* 0 when no witness is known */
  const char* witness_provenance; /* static string */
} lsm_exact_stats;

LSMATCH_API lsm_status lsm_exact(const lsm_graph* g, lsm_exact_stats* out);
/* Exhaustive; LSM_ERR_CAPABILITY above 20 vertices. */
LSMATCH_API lsm_status lsm_nash_williams_density(const lsm_graph* g,
                                                 uint32_t* out);
/* Exhaustive; LSM_ERR_CAPABILITY above 25 edges. */
LSMATCH_API lsm_status lsm_brute_force_matching(const lsm_graph* g,
                                                uint64_t* out);

/* Adds exact_m, ell and ratio to a report produced by this library. */
LSMATCH_API lsm_status lsm_report_attach_exact(const char* report_json,
                                               const lsm_graph* g,
                                               char** out);

/* ---- sampling estimator ------------------------------------------------- */

typedef struct lsm_sampler_config {
  uint32_t s;             /* sample size, clamped to n */
  double epsilon;
  uint32_t repetitions;   /* 0 selects ceil(8 / epsilon^2) */
  uint64_t seed;
  uint32_t median_groups; /* > 1 selects median of group means */
  uint32_t threads;
} lsm_sampler_config;

LSMATCH_API void lsm_sampler_config_init(lsm_sampler_config* cfg);
LSMATCH_API lsm_status lsm_estimate_ls(const lsm_graph* g,
                                       const lsm_sampler_config* cfg,
                                       char** report_json);

/* ---- vertex-arrival streams --------------------------------------------- */

/* Uniform permutation of 0..n-1 written to out[0..n). */
LSMATCH_API lsm_status lsm_random_order(uint32_t n, uint64_t seed,
                                        uint32_t* out);
/* Stream text for g in the given arrival order (NULL: 0, 1, ..., n-1). */
LSMATCH_API lsm_status lsm_stream_format(const lsm_graph* g,
                                         const uint32_t* order, char** out);
/* One pass over a stream file, holding one record at a time. */
LSMATCH_API lsm_status lsm_stream_approx_file(const char* path,
                                              double epsilon, uint64_t seed,
                                              char** report_json);
LSMATCH_API lsm_status lsm_stream_approx_graph(const lsm_graph* g,
                                               const uint32_t* order,
                                               double epsilon, uint64_t seed,
                                               char** report_json);

/* ---- simultaneous protocol ---------------------------------------------- */

typedef enum lsm_partition_mode {
  LSM_PARTITION_RANDOM = 0,
  LSM_PARTITION_ROUND_ROBIN = 1
} lsm_partition_mode;

typedef enum lsm_tau_rule {
  LSM_TAU_K = 0,
  LSM_TAU_K_OVER_12_5 = 1
} lsm_tau_rule;

typedef struct lsm_protocol_config {
  uint32_t players;
  lsm_partition_mode partition;
  double epsilon;
  uint64_t seed;
  uint32_t k;        /* 0: ceil(n^(1/3)) */
  uint32_t b;        /* 0: 100k */
  uint32_t d;        /* 1 or 2 */
  uint32_t r_sample; /* 0: c_r * ceil(log2(k+1)) */
  uint32_t c_r;
  lsm_tau_rule tau;
  int include_transcript;
} lsm_protocol_config;

LSMATCH_API void lsm_protocol_config_init(lsm_protocol_config* cfg);
LSMATCH_API lsm_status lsm_protocol_run(const lsm_graph* g,
                                        const lsm_protocol_config* cfg,
                                        char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* LSMATCH_LSMATCH_H_ */
