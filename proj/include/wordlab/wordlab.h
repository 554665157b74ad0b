/*
 * Copyright 2026 The wordlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS-IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to wordlab: open/closed factor complexity, Rauzy graphs and
 * return words of prefixes of infinite words.
 *
 * Every fallible call returns a wl_status. On failure the message is kept in
 * thread-local storage and read with wl_last_error(). Strings handed out
 * through `char** out` are owned by the caller and released with
 * wl_string_free(). Handles are released with their matching *_free, which
 * accepts NULL.
 */

#ifndef WORDLAB_WORDLAB_H
#define WORDLAB_WORDLAB_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(WORDLAB_BUILDING)
#    define WL_API __declspec(dllexport)
#  else
#    define WL_API __declspec(dllimport)
#  endif
#else
#  define WL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wl_status {
  WL_OK = 0,
  WL_ERR_DOMAIN = 1,           /* argument outside the operation's domain */
  WL_ERR_PARSE = 2,            /* malformed morphism, slope, range, CSV, DOT */
  WL_ERR_UNKNOWN_SOURCE = 3,
  WL_ERR_UNCERTIFIED = 4,      /* length above stable_upto without force */
  WL_ERR_UNSTABLE = 5,         /* stabilization hit the prefix cap */
  WL_ERR_INSUFFICIENT = 6,     /* fewer than two occurrences */
  WL_ERR_RANGE = 7,            /* length does not fit the buffer */
  WL_ERR_NULL_ARG = 8,
  WL_ERR_INTERNAL = 9
} wl_status;

typedef struct wl_source wl_source;
typedef struct wl_buffer wl_buffer;
typedef struct wl_profile wl_profile;
typedef struct wl_rauzy wl_rauzy;
typedef struct wl_returns wl_returns;
typedef struct wl_verify_result wl_verify_result;

WL_API const char* wl_version(void);
WL_API const char* wl_status_name(wl_status status);
/* Message of the last failed call on this thread; "" if none. */
WL_API const char* wl_last_error(void);
WL_API void wl_string_free(char* s);

/* Details of the last WL_ERR_UNSTABLE on this thread. */
typedef struct wl_unstable_info {
  size_t prefix_length;
  size_t length;
  size_t count_short;
  size_t count_long;
  size_t certified_upto;
} wl_unstable_info;

/* Returns 1 and fills `out` when the last error was WL_ERR_UNSTABLE. */
WL_API int wl_last_unstable(wl_unstable_info* out);

/* ---- sources ---------------------------------------------------------- */

WL_API size_t wl_preset_count(void);
WL_API const char* wl_preset_name(size_t i);

WL_API wl_status wl_source_preset(const char* name, wl_source** out);
/* spec like "a=aba,b=bbb"; seed is a letter of the morphism's alphabet. */
WL_API wl_status wl_source_morphic(const char* spec, char seed, wl_source** out);
/* u v v v ... over `alphabet`; u may be empty, v may not. */
WL_API wl_status wl_source_periodic(const char* alphabet, const char* u, const char* v,
                                    wl_source** out);
/* slope "p/q", "cf:1,2" or "cf:2,(1)"; intercept "p/q" in [0, 1). */
WL_API wl_status wl_source_mechanical(const char* slope, const char* intercept,
                                      wl_source** out);
/* A finite word analysed as its own buffer. */
WL_API wl_status wl_source_literal(const char* alphabet, const char* word, wl_source** out);
WL_API void wl_source_free(wl_source* source);

WL_API wl_status wl_source_describe(const wl_source* source, char** out);
WL_API wl_status wl_source_prefix(const wl_source* source, size_t length, char** out);

/* ---- buffers ---------------------------------------------------------- */

/* Smallest doubling prefix whose factor counts agree for all lengths
 * <= n_max. max_prefix = 0 selects the default cap of 2^22. */
WL_API wl_status wl_buffer_stabilize(const wl_source* source, size_t n_max, size_t max_prefix,
                                     wl_buffer** out);
/* Plain prefix trusted only up to `stable_upto`. */
WL_API wl_status wl_buffer_prefix(const wl_source* source, size_t length, size_t stable_upto,
                                  wl_buffer** out);
WL_API void wl_buffer_free(wl_buffer* buffer);

WL_API size_t wl_buffer_length(const wl_buffer* buffer);
WL_API size_t wl_buffer_stable_upto(const wl_buffer* buffer);
WL_API wl_status wl_buffer_text(const wl_buffer* buffer, char** out);
/* Distinct factors of length n, lexicographic, one per line. */
WL_API wl_status wl_buffer_factors(const wl_buffer* buffer, size_t n, int force, char** out);

/* ---- closure ---------------------------------------------------------- */

/* Bytes are symbols. frontier is written only for closed words. */
WL_API wl_status wl_classify(const char* word, size_t length, int* closed, size_t* frontier);
WL_API wl_status wl_classify_brute(const char* word, size_t length, int* closed,
                                   size_t* frontier);
/* out[i] = longest proper border of word[0..i]; `out` holds `length` entries. */
WL_API wl_status wl_border_table(const char* word, size_t length, size_t* out);
WL_API wl_status wl_shortest_period(const char* word, size_t length, size_t* out);

/* ---- complexity ------------------------------------------------------- */

typedef struct wl_row {
  size_t n;
  size_t p;
  size_t op;
  size_t cl;
  int approximate;
} wl_row;

/* threads <= 1 runs serially. */
WL_API wl_status wl_profile_compute(const wl_buffer* buffer, size_t n_from, size_t n_to,
                                    int force, unsigned threads, wl_profile** out);
WL_API void wl_profile_free(wl_profile* profile);
WL_API size_t wl_profile_size(const wl_profile* profile);
WL_API wl_status wl_profile_row(const wl_profile* profile, size_t i, wl_row* out);
/* Ascending frontier lengths of row i; valid while the profile lives. */
WL_API wl_status wl_profile_frontiers(const wl_profile* profile, size_t i,
                                      const size_t** lengths, size_t* count);
/* Rows with n = r mod d, plus their largest cl. */
WL_API wl_status wl_profile_syndetic(const wl_profile* profile, size_t d, size_t r,
                                     wl_profile** out, size_t* max_cl);
WL_API wl_status wl_profile_csv(const wl_profile* profile, int approx_column, char** out);
/* Parses and re-emits a profile CSV. */
WL_API wl_status wl_csv_normalize(const char* csv, char** out);

/* ---- rauzy ------------------------------------------------------------ */

WL_API wl_status wl_rauzy_build(const wl_buffer* buffer, size_t n, int force, wl_rauzy** out);
WL_API void wl_rauzy_free(wl_rauzy* graph);
WL_API size_t wl_rauzy_vertex_count(const wl_rauzy* graph);
WL_API size_t wl_rauzy_edge_count(const wl_rauzy* graph);
WL_API wl_status wl_rauzy_dot(const wl_rauzy* graph, char** out);
/* Special factors, one per line. */
WL_API wl_status wl_rauzy_specials(const wl_rauzy* graph, char** left, char** right);
/* Parses and re-emits a DOT document. */
WL_API wl_status wl_dot_normalize(const char* dot, char** out);

/* Violation counts of the realized-window checks. */
WL_API wl_status wl_check_neighbors(const wl_buffer* buffer, size_t n, size_t* violations);
WL_API wl_status wl_check_frontier_distance(const wl_buffer* buffer, size_t n, size_t i_max,
                                            size_t* violations);
WL_API wl_status wl_check_closed_walks(const wl_buffer* buffer, size_t n, size_t max_walk,
                                       size_t* violations);

/* ---- returns ---------------------------------------------------------- */

WL_API wl_status wl_returns_analyze(const wl_buffer* buffer, const char* target,
                                    wl_returns** out);
WL_API void wl_returns_free(wl_returns* returns);
WL_API size_t wl_returns_occurrences(const wl_returns* returns);
WL_API size_t wl_returns_count(const wl_returns* returns);
WL_API wl_status wl_returns_word(const wl_returns* returns, size_t i, char** out);
WL_API wl_status wl_returns_complete(const wl_returns* returns, size_t i, char** out);
/* WL_ERR_INSUFFICIENT with fewer than two occurrences. */
WL_API wl_status wl_returns_max_gap(const wl_returns* returns, size_t* out);

/* ---- verification ----------------------------------------------------- */

typedef enum wl_verify_status {
  WL_VERIFY_PASS = 0,
  WL_VERIFY_FAIL = 1,
  WL_VERIFY_SKIPPED = 2
} wl_verify_status;

WL_API size_t wl_check_count(void);
WL_API const char* wl_check_name(size_t i);
WL_API const char* wl_check_summary(size_t i);

/* selector: NULL, "" or "all", or comma-separated names; "name*" matches a
 * prefix. max_prefix = 0 keeps the default cap. */
WL_API wl_status wl_verify_run(const char* selector, size_t max_prefix, wl_verify_result** out);
WL_API void wl_verify_free(wl_verify_result* result);
WL_API size_t wl_verify_size(const wl_verify_result* result);
WL_API size_t wl_verify_failures(const wl_verify_result* result);
/* Strings stay valid while the result lives. */
WL_API wl_status wl_verify_outcome(const wl_verify_result* result, size_t i, const char** name,
                                   wl_verify_status* status, const char** detail);

#ifdef __cplusplus
}
#endif

#endif /* WORDLAB_WORDLAB_H */
