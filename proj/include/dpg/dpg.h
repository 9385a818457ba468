/*
 * Copyright 2026 the dpgsolve authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the discounted payoff game solver. All objects are opaque
 * handles; every fallible call returns a dpg_status, with a human-readable
 * message available from dpg_last_error() (thread-local). Strings returned
 * as char* are heap-allocated and must be released with dpg_string_free().
 * Rational values cross the boundary as exact "p/q" strings, never decimals.
 */

#ifndef DPG_DPG_H
#define DPG_DPG_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct dpg_game dpg_game;
typedef struct dpg_valuation dpg_valuation;
typedef struct dpg_solution dpg_solution;

typedef enum dpg_status {
  DPG_OK = 0,
  DPG_ERR_PARSE = 1,        /* malformed .dpg or valuation text */
  DPG_ERR_INVALID_GAME = 2, /* game invariant violated (sink, discount range) */
  DPG_ERR_ARGUMENT = 3,     /* bad parameter */
  DPG_ERR_LIMIT = 4,        /* iteration / resample / enumeration cap hit */
  DPG_ERR_VERIFY = 5,       /* verification or cross-check failed */
  DPG_ERR_INTERNAL = 6      /* broken internal invariant */
} dpg_status;

/* Message for the most recent failure on this thread; never NULL. */
const char* dpg_last_error(void);

void dpg_string_free(char* s);

/* ---- games --------------------------------------------------------------- */

/* Parses .dpg text (see README for the format). */
dpg_status dpg_game_parse(const char* text, dpg_game** out);

/*
 * Deterministic random game: `discount_pool` is a comma-separated list of
 * rationals in [0,1), e.g. "1/2,2/3,3/4".
 */
dpg_status dpg_game_generate(int vertices, int out_degree, long weight_bound,
                             const char* discount_pool, uint64_t seed, dpg_game** out);

void dpg_game_free(dpg_game* g);

/* Canonical .dpg text; round-trips through dpg_game_parse exactly. */
char* dpg_game_serialize(const dpg_game* g);

/* NULL when the game is valid, else newline-separated violations. */
char* dpg_game_validate(const dpg_game* g);

int dpg_game_vertex_count(const dpg_game* g);
int dpg_game_edge_count(const dpg_game* g);
int dpg_game_vertex_owner(const dpg_game* g, int vertex); /* 0 = MIN, 1 = MAX */

/* ---- valuations ----------------------------------------------------------- */

/*
 * Parses a valuation file: one `<vertex-id> <rational>` pair per line,
 * `#` comments; every vertex must be covered exactly once.
 */
dpg_status dpg_valuation_parse(const dpg_game* g, const char* text, dpg_valuation** out);

void dpg_valuation_free(dpg_valuation* v);

/* Exact value as "p/q". */
char* dpg_valuation_get(const dpg_valuation* v, int vertex);

/*
 * Solution check: DPG_OK when the valuation satisfies every inequation and
 * each vertex has a sharp outgoing edge; `report` then lists one sharp edge
 * per vertex. DPG_ERR_VERIFY otherwise, with the witness (first violated
 * inequation or vertex without sharp edge) in `report`.
 */
dpg_status dpg_verify_valuation(const dpg_game* g, const dpg_valuation* v, char** report);

/* ---- solver ---------------------------------------------------------------- */

typedef enum dpg_noise_policy {
  DPG_NOISE_NEVER = 0,
  DPG_NOISE_ON_DEGENERACY = 1,
  DPG_NOISE_ALWAYS = 2
} dpg_noise_policy;

typedef enum dpg_pivot_mode { DPG_PIVOT_LP_FIRST = 0, DPG_PIVOT_MIXED = 1 } dpg_pivot_mode;

typedef struct dpg_solve_options {
  int has_seed;
  uint64_t seed;          /* drives offset factors, noise, and the initial strategy */
  int use_offset_factors; /* default 1 */
  int noise_policy;       /* dpg_noise_policy, default ON_DEGENERACY */
  int pivot_mode;         /* dpg_pivot_mode, default LP_FIRST */
  long max_iterations;    /* 0 = 64·|E| */
} dpg_solve_options;

void dpg_solve_options_init(dpg_solve_options* opts);

/* DPG_ERR_LIMIT carries the iteration trace in dpg_last_error(). */
dpg_status dpg_solve(const dpg_game* g, const dpg_solve_options* opts, dpg_solution** out);

void dpg_solution_free(dpg_solution* s);

char* dpg_solution_value(const dpg_solution* s, int vertex); /* "p/q" */
int dpg_solution_strategy_edge(const dpg_solution* s, int vertex);
int dpg_solution_strategy_successor(const dpg_solution* s, int vertex);
int dpg_solution_iterations(const dpg_solution* s);
long long dpg_solution_pivots(const dpg_solution* s);

/* Conditioning report. */
int dpg_solution_resamples(const dpg_solution* s);
int dpg_solution_degeneracy_events(const dpg_solution* s);
int dpg_solution_noise_applied(const dpg_solution* s);
int dpg_solution_alpha_applied(const dpg_solution* s);
uint64_t dpg_solution_noise_seed(const dpg_solution* s);
uint64_t dpg_solution_alpha_seed(const dpg_solution* s);
char* dpg_solution_epsilon(const dpg_solution* s);     /* "p/q", "0/1" without noise */
char* dpg_solution_gap_bound(const dpg_solution* s);   /* "p/q" */
char* dpg_solution_contraction(const dpg_solution* s); /* "p/q" */

/* Line-oriented iteration log; `full` adds strategies. */
char* dpg_solution_trace(const dpg_solution* s, int full);

/* ---- oracles ---------------------------------------------------------------- */

dpg_status dpg_brute_force(const dpg_game* g, long long strategy_cap, dpg_valuation** out);

/* `tolerance` is a positive rational string such as "1/1000000". */
dpg_status dpg_value_iteration(const dpg_game* g, const char* tolerance, dpg_valuation** out);

/*
 * Compares a solution against the brute-force oracle (exact) when the joint
 * strategy count fits under `strategy_cap`, else against value iteration at
 * `tolerance`. DPG_OK with verdict "PASS ..."; DPG_ERR_VERIFY with
 * "FAIL ..." naming the offending vertex and both values.
 */
dpg_status dpg_cross_check(const dpg_game* g, const dpg_solution* s, long long strategy_cap,
                           const char* tolerance, char** verdict);

#ifdef __cplusplus
}
#endif

#endif /* DPG_DPG_H */
