/* Copyright 2026 The opint authors
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

/* C interface to the operator-integral laboratory: opaque handles, status
 * codes, text buffers for JSON/CSV payloads.  Every call is thread-safe for
 * distinct handles; the error message of the last failing call is kept per
 * thread.  Pass INFINITY for p = infinity ("inf" in CSV output).
 */

#ifndef OPINT_H
#define OPINT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum opint_status {
  OPINT_OK = 0,
  OPINT_ERR_INVALID_ARGUMENT = 1,
  OPINT_ERR_PARSE = 2,
  OPINT_ERR_NOT_NORMAL = 3,
  OPINT_ERR_NO_CONVERGENCE = 4,
  OPINT_ERR_DIMENSION_MISMATCH = 5,
  OPINT_ERR_MISSING_DERIVATIVE = 6,
  OPINT_ERR_NOT_TORUS_FUNCTION = 7,
  OPINT_ERR_DEGREE_TOO_HIGH = 8,
  OPINT_ERR_TRUNCATION_INSUFFICIENT = 9,
  OPINT_ERR_SUPPORT_NOT_COVERED = 10,
  OPINT_ERR_REGIME_MISMATCH = 11,
  OPINT_ERR_CONSTRAINT_VIOLATED = 12,
  OPINT_ERR_UNSUPPORTED_REPRESENTATION = 13,
  OPINT_ERR_MISSING_FACTORIZATION = 14,
  OPINT_ERR_INTERNAL = 15
} opint_status;

typedef struct opint_matrix opint_matrix; /* dense complex matrix */
typedef struct opint_buffer opint_buffer; /* owned text payload */

const char* opint_version(void);
const char* opint_status_name(opint_status status);
/* Message of the last failing call on this thread; empty string if none. */
const char* opint_last_error(void);

void opint_matrix_free(opint_matrix* m);
void opint_buffer_free(opint_buffer* b);
const char* opint_buffer_data(const opint_buffer* b);
size_t opint_buffer_size(const opint_buffer* b);

/* Matrix interchange: {"rows":n,"cols":m,"re":[...],"im":[...]}, row-major. */
opint_status opint_matrix_from_json(const char* json, opint_matrix** out);
opint_status opint_matrix_to_json(const opint_matrix* m, opint_buffer** out);

/* Spectral decomposition.  kind is "hermitian" or "unitary"; tol <= 0 picks
 * the default.  Emits {"kind":...,"dim":n,"points":[{"value":...,
 * "projector":{matrix}}]}. */
opint_status opint_decompose(const opint_matrix* m, const char* kind, double tol,
                             opint_buffer** json_out);

opint_status opint_schatten_norm(const opint_matrix* m, double p, double* out);

/* f(A,B) (Hermitian pair) / f(U,V) (unitary pair) for a trig polynomial f
 * given as {"periods":[Lx,Ly],"terms":[{"j":..,"k":..,"re":..,"im":..}]}. */
opint_status opint_apply_fab(const char* trigpoly_json, const opint_matrix* a,
                             const opint_matrix* b, opint_matrix** out);
opint_status opint_apply_fuv(const char* trigpoly_json, const opint_matrix* u,
                             const opint_matrix* v, opint_matrix** out);

/* Randomized verification of the perturbation identities "7.1", "12.1" or
 * "10.2"; CSV rows identity,trial,dim,residual,verdict. */
opint_status opint_verify(const char* identity, int dim_max, int trials, uint64_t seed,
                          double tol, opint_buffer** csv_out, double* max_residual);

/* Counterexample-family growth scan over N and p lists (and optional epsilon
 * list, default {1}); CSV schema
 * family,N,p,epsilon,measured,predicted,bound,verdict. */
opint_status opint_counterexample(const int* n_values, size_t n_count, const double* p_values,
                                  size_t p_count, const double* eps_values, size_t eps_count,
                                  opint_buffer** csv_out, int* failures);

/* Lipschitz-ratio scan; family is "counterexample", "random-trigpoly" or
 * "class-C".  Same CSV schema as above. */
opint_status opint_scan(const char* family, const int* n_values, size_t n_count,
                        const double* p_values, size_t p_count, int trials, uint64_t seed,
                        opint_buffer** csv_out, int* failures);

/* B^1_{inf,1} norm of a trig polynomial under the pinned default filter. */
opint_status opint_besov_norm(const char* trigpoly_json, double* out);

/* Randomized Schatten-bound audits; theorem is one of "4.1", "4.3i",
 * "4.3ii", "4.3iii", "5.1", "5.2" or "all".  CSV schema
 * context,p,q,r,measured,bound,verdict. */
opint_status opint_audit(const char* theorem, int trials, int dim_max, uint64_t seed,
                         opint_buffer** csv_out, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* OPINT_H */
