/* Copyright 2026 The Authors.
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

/* tutte-forge: exact Tutte polynomials, bicycle dimensions, and odd-integer
 * quotient checks for binary matroids, behind a plain C interface.
 *
 * Every function that can fail returns a tf_status; 0 is success. A nonzero
 * status leaves a human-readable message in tf_last_error() (thread-local).
 * Objects are opaque handles freed by their matching *_free call. Report
 * documents and matrix dumps come back as NUL-terminated malloc'd strings;
 * release them with tf_free_text. All numbers inside documents are exact
 * decimal strings, and rationals cross this interface as "p" or "p/q" text.
 */

#ifndef TUTTEFORGE_TUTTEFORGE_H_
#define TUTTEFORGE_TUTTEFORGE_H_

#include <stdint.h>

#if defined(_WIN32)
#define TF_API __declspec(dllexport)
#else
#define TF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tf_status {
  TF_OK = 0,
  TF_ERR_USAGE = 1,           /* bad argument, bad name, bad config */
  TF_ERR_PARSE = 2,           /* malformed matrix text; see message */
  TF_ERR_UNKNOWN_ELEMENT = 3, /* label not in the ground set */
  TF_ERR_DIMENSION = 4,       /* incompatible operand dimensions */
  TF_ERR_SIZE_GUARD = 5,      /* instance exceeds a hard algorithm limit */
  TF_ERR_BUDGET = 6,          /* node budget exhausted */
  TF_ERR_VERIFY = 7,          /* internal cross-check failed */
  TF_ERR_INTERNAL = 8
} tf_status;

typedef struct tf_matroid tf_matroid;

TF_API const char* tf_version(void);
TF_API const char* tf_status_name(int status);

/* Message for the most recent failure on this thread; empty string if none. */
TF_API const char* tf_last_error(void);

/* ---- construction ---------------------------------------------------- */

/* Built-in matroids: "paper-n", "paper-nprime", "golay24", "k2".."k8",
 * "loop", "coloop", "loop+coloop", "circuit3".."circuit8". With self_test
 * nonzero the fixture additionally verifies the Rosenstiehl identity and
 * the odd-integer theorem at z=1 before it is returned. */
TF_API tf_status tf_matroid_from_fixture(const char* name, int self_test,
                                         tf_matroid** out);

/* Newline-separated matrix text: "r n reduced|full" then r rows of 0/1. */
TF_API tf_status tf_matroid_from_text(const char* text, tf_matroid** out);
TF_API tf_status tf_matroid_from_file(const char* path, tf_matroid** out);

TF_API void tf_matroid_free(tf_matroid* m);

/* ---- queries --------------------------------------------------------- */

TF_API int tf_matroid_rank(const tf_matroid* m);
TF_API int tf_matroid_size(const tf_matroid* m);

TF_API tf_status tf_matroid_dual(const tf_matroid* m, tf_matroid** out);

/* contract/delete are arrays of element labels (may be NULL when count 0). */
TF_API tf_status tf_matroid_minor(const tf_matroid* m, const int* contract,
                                  int n_contract, const int* del, int n_delete,
                                  tf_matroid** out);

/* Sets *out to 1 or 0. node_budget <= 0 uses the built-in default. */
TF_API tf_status tf_matroid_is_isomorphic(const tf_matroid* a,
                                          const tf_matroid* b,
                                          int64_t node_budget, int* out);

/* Returns 1, 0, or -1 on a NULL handle. */
TF_API int tf_matroid_is_identically_self_dual(const tf_matroid* m);

/* Matrix-text dump ("full" form); round-trips through tf_matroid_from_text
 * to a matroid with the same rank-nullity census. */
TF_API tf_status tf_matroid_dump(const tf_matroid* m, char** out_text);

/* ---- reports ---------------------------------------------------------- */

typedef struct tf_report_options {
  int workers;       /* <= 0 reads TUTTE_FORGE_WORKERS, defaulting to 1 */
  int plain;         /* human polynomial display instead of the document */
  int timings;       /* append wall-clock lines (breaks byte-stability) */
  int verify_delcon; /* cross-check against deletion-contraction (n <= 18) */
  const char* eval_x; /* optional "p" or "p/q"; both or neither */
  const char* eval_y;
  int64_t z_min; /* scan window for lv; default when z_min > z_max */
  int64_t z_max;
} tf_report_options;

/* Fills in the documented defaults (workers 0, no flags, z in [-16, 16]). */
TF_API void tf_report_options_init(tf_report_options* opt);

/* input_id is echoed into the document's input field. */
TF_API tf_status tf_report_tutte(const tf_matroid* m, const char* input_id,
                                 const tf_report_options* opt, char** out_doc);

/* *out_violations (optional) receives the violating-z count. */
TF_API tf_status tf_report_lv(const tf_matroid* m, const char* input_id,
                              const tf_report_options* opt, char** out_doc,
                              int64_t* out_violations);

typedef struct tf_search_options {
  int target_min;  /* element-count window; negatives mean "whole range" */
  int target_max;
  int target_rank; /* -1: any */
  int mode;        /* 0 sampled, 1 exhaustive (exhaustive needs n <= 12) */
  uint64_t seed;
  int64_t samples;       /* draws in sampled mode */
  int64_t census_budget; /* per-minor census node budget; <= 0 unlimited */
  int dedup;             /* suppress census-equal repeats */
  int workers;
  int64_t z_min;
  int64_t z_max;
} tf_search_options;

TF_API void tf_search_options_init(tf_search_options* opt);

/* *out_results (optional) receives the number of reported minors. */
TF_API tf_status tf_report_search(const tf_matroid* source,
                                  const char* source_id,
                                  const tf_search_options* opt, char** out_doc,
                                  int64_t* out_results);

/* Checks every reduced representation with at most max_n elements
 * (max_n <= 10). *out_violations (optional) receives the violation count. */
TF_API tf_status tf_report_scan(int max_n, int64_t z_min, int64_t z_max,
                                int workers, char** out_doc,
                                int64_t* out_violations);

TF_API void tf_free_text(char* text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* TUTTEFORGE_TUTTEFORGE_H_ */
