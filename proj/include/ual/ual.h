/*
   Copyright 2026 The libual Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UAL_UAL_H
#define UAL_UAL_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define UAL_API __declspec(dllexport)
#else
#define UAL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ual_status {
  UAL_OK = 0,
  UAL_VALIDATION_ERROR = 1,
  UAL_INPUT_ERROR = 2,
  UAL_BUDGET_EXCEEDED = 3,
  UAL_INTERNAL_ERROR = 4
} ual_status;

typedef enum ual_order { UAL_ORDER_DEGREVLEX = 0, UAL_ORDER_LEX = 1 } ual_order;

typedef struct ual_algebra ual_algebra;
typedef struct ual_comm_algebra ual_comm_algebra;
typedef struct ual_presentation ual_presentation;

typedef struct ual_budget {
  uint64_t max_candidates;
  unsigned threads;
} ual_budget;

UAL_API const char* ual_version(void);
/* Message of the last failing call on this thread; empty after success. */
UAL_API const char* ual_last_error(void);
UAL_API void ual_string_free(char* s);
UAL_API void ual_budget_default(ual_budget* budget);

/* Algebra files. check != 0 rejects algebras violating the Leibniz identity. */
UAL_API ual_status ual_algebra_from_json(const char* json, int check, ual_algebra** out);
UAL_API ual_status ual_algebra_from_file(const char* path, int check, ual_algebra** out);
/* aff2, sl2, heisenberg, abelianN, glN; prime 0 means the rationals. */
UAL_API ual_status ual_algebra_builtin(const char* name, uint64_t prime, ual_algebra** out);
UAL_API ual_status ual_algebra_reduce_mod(const ual_algebra* alg, uint64_t prime,
                                          ual_algebra** out);
UAL_API size_t ual_algebra_dim(const ual_algebra* alg);
/* 0 for the rationals. */
UAL_API uint64_t ual_algebra_characteristic(const ual_algebra* alg);
UAL_API ual_status ual_algebra_to_json(const ual_algebra* alg, char** out);
UAL_API void ual_algebra_free(ual_algebra* alg);

/* field, truncated:K */
UAL_API ual_status ual_comm_algebra_builtin(const char* name, uint64_t prime,
                                            ual_comm_algebra** out);
UAL_API ual_status ual_comm_algebra_from_file(const char* path, ual_comm_algebra** out);
UAL_API void ual_comm_algebra_free(ual_comm_algebra* alg);

/* g == NULL builds the presentation of A(h) = A(h, h). */
UAL_API ual_status ual_presentation_build(const ual_algebra* h, const ual_algebra* g,
                                          ual_order order, ual_presentation** out);
UAL_API size_t ual_presentation_groebner_size(const ual_presentation* pres);
UAL_API ual_status ual_presentation_to_json(const ual_presentation* pres, char** out);
UAL_API void ual_presentation_free(ual_presentation* pres);

/* Every command writes a JSON payload to *out, also on UAL_VALIDATION_ERROR
 * when the payload describes the failed check. */
UAL_API ual_status ual_check(const ual_algebra* alg, char** out);
UAL_API ual_status ual_universal_polynomials(const ual_algebra* h, const ual_algebra* g,
                                             char** out);
UAL_API ual_status ual_bialgebra_check(const ual_presentation* pres, char** out);
UAL_API ual_status ual_characters(const ual_presentation* pres, const ual_budget* budget,
                                  char** out);
UAL_API ual_status ual_endomorphisms(const ual_algebra* alg, int automorphisms_only,
                                     const ual_budget* budget, char** out);
UAL_API ual_status ual_representations(const ual_algebra* g, size_t dim,
                                       const ual_budget* budget, char** out);
UAL_API ual_status ual_gradings(const ual_presentation* pres, const char* group,
                                const ual_budget* budget, char** out);
UAL_API ual_status ual_classify_gradings(const ual_presentation* pres, const char* group,
                                         const ual_budget* budget, char** out);
UAL_API ual_status ual_actions(const ual_presentation* pres, const char* group,
                               const ual_budget* budget, char** out);
UAL_API ual_status ual_verify_bialgebra_hom(const ual_presentation* pres, const char* json,
                                            char** out);
UAL_API ual_status ual_current_algebra(const ual_algebra* h, const ual_comm_algebra* a,
                                       ual_algebra** out);

#ifdef __cplusplus
}
#endif

#endif  /* UAL_UAL_H */
