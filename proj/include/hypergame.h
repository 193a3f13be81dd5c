/* Copyright 2026 The Hypergame Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the hypergame engine.
 *
 * Objects are opaque handles released with their *_free function. Every
 * fallible call returns an hg_status; on failure hg_last_error() describes
 * the problem until the next call on the same thread. Strings returned
 * through char** are owned by the caller and released with hg_string_free.
 * Lists of types ("universes") are semicolon-separated type texts. */

#ifndef HYPERGAME_H_
#define HYPERGAME_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HG_API __declspec(dllexport)
#else
#define HG_API __attribute__((visibility("default")))
#endif

typedef enum {
  HG_OK = 0,
  HG_ERR_PARSE = 1,       /* malformed type, term, or trace text */
  HG_ERR_TYPE = 2,        /* ill-typed term or type operation outside its domain */
  HG_ERR_DIALOGUE = 3,    /* precondition on a dialogue or strategy */
  HG_ERR_INTERACTION = 4, /* strategy unfit for interaction or readback */
  HG_ERR_BUDGET = 5,      /* interaction step budget exhausted */
  HG_ERR_ARGUMENT = 6,    /* null handle or out-of-range argument */
  HG_ERR_INTERNAL = 7
} hg_status;

typedef enum {
  HG_MODE_AUTO = -1, /* black-box for closed types, P-backtracking otherwise */
  HG_MODE_FULL = 0,
  HG_MODE_P_BACKTRACKING = 1,
  HG_MODE_BLACK_BOX = 2
} hg_mode;

typedef enum { HG_ENGINE_SYNTAX = 0, HG_ENGINE_GAMES = 1 } hg_engine;

typedef struct hg_type hg_type;
typedef struct hg_term hg_term;
typedef struct hg_strategy hg_strategy;

HG_API const char* hg_last_error(void);
HG_API const char* hg_status_name(hg_status status);
HG_API void hg_string_free(char* s);

/* Types */
HG_API hg_status hg_type_parse(const char* text, hg_type** out);
HG_API void hg_type_free(hg_type* t);
HG_API hg_status hg_type_to_string(const hg_type* t, char** out);
HG_API hg_status hg_type_prenex(const hg_type* t, hg_type** out);
HG_API int hg_type_equal(const hg_type* a, const hg_type* b);
HG_API int hg_type_is_closed(const hg_type* t);

/* Transition systems: Graphviz text of the reachable fragment, and the
 * traces from the root (one per line, "ε" for the empty one). */
HG_API hg_status hg_graph_dot(const hg_type* t, int depth, const char* universe, char** out);
HG_API hg_status hg_graph_size(const hg_type* t, int depth, const char* universe,
                               size_t* states, size_t* edges);
HG_API hg_status hg_traces(const hg_type* t, int max_length, const char* universe,
                           int max_imports, char** out);

/* Terms */
HG_API hg_status hg_term_parse(const char* text, hg_term** out);
HG_API void hg_term_free(hg_term* t);
HG_API hg_status hg_term_to_string(const hg_term* t, char** out);
HG_API hg_status hg_term_typecheck(const hg_term* t, hg_type** out);
HG_API int hg_term_alpha_equal(const hg_term* a, const hg_term* b);
/* Normal form: syntactic β-normalization followed by η-expansion, or
 * normalization by interaction. With the games engine and a non-null
 * transcript, the interaction transcript is returned in the trace format,
 * also when the budget runs out (0 selects the default budget). */
HG_API hg_status hg_term_normalize(const hg_term* t, hg_engine engine, size_t budget,
                                   hg_term** out, char** transcript);

/* Strategies */
HG_API void hg_strategy_free(hg_strategy* s);
HG_API hg_status hg_strategy_compile(const hg_term* t, const hg_type* ty, hg_strategy** out);
HG_API hg_status hg_strategy_readback(const hg_strategy* s, const hg_type* ty, hg_term** out);
HG_API hg_status hg_strategy_read(const char* text, hg_strategy** out);
HG_API hg_status hg_strategy_write(const hg_strategy* s, char** out);
HG_API int hg_strategy_equal(const hg_strategy* a, const hg_strategy* b);
/* Validation and liveness; *ok is 1 or 0 and *reason explains a 0. */
HG_API hg_status hg_strategy_check(const hg_strategy* s, const hg_type* ty, hg_mode mode,
                                   int* ok, char** reason);
/* P's answer to an odd-length dialogue (trace format), as one move line;
 * *out is NULL when the strategy has no answer. */
HG_API hg_status hg_strategy_respond(const hg_strategy* s, const char* dialogue, char** out);

/* All finite live strategies up to the depth bound, written one after the
 * other, each introduced by a "# strategy N" comment line. */
HG_API hg_status hg_strategies_enumerate(const hg_type* ty, hg_mode mode, int depth,
                                         int copycat_only, const char* universe,
                                         size_t* count, char** out);

/* The Opponent's legal moves after a dialogue, one move line each. */
HG_API hg_status hg_opponent_moves(const hg_type* ty, const char* dialogue, hg_mode mode,
                                   char** out);

/* Term/strategy correspondence report; *ok is 1 when no mismatch was found. */
HG_API hg_status hg_check_bijection(const hg_type* ty, size_t term_bound, int depth,
                                    int* ok, char** summary);

#ifdef __cplusplus
}
#endif

#endif /* HYPERGAME_H_ */
