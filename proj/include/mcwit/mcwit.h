// Copyright 2026 The mcwit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the mcwit library.
 *
 * Every function returns an mcwit_status. On failure the message is available
 * from mcwit_last_error() (per thread) until the next call on that thread.
 * Handles are opaque and owned by the caller; release each with its
 * matching *_destroy function. Destroy functions accept NULL.
 *
 * Matrices cross the boundary as interleaved (re, im) doubles in row-major
 * order, 2 * dim * dim values. Basis ordering puts slot 0 in the most
 * significant position. Slots of a k-copy wiring over an n-party system are
 * numbered copy * n + party.
 */
#ifndef MCWIT_MCWIT_H
#define MCWIT_MCWIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(MCWIT_BUILDING_LIBRARY)
#define MCWIT_API __declspec(dllexport)
#else
#define MCWIT_API __declspec(dllimport)
#endif
#else
#define MCWIT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mcwit_status {
    MCWIT_OK = 0,
    MCWIT_INVALID_ARGUMENT = 1,
    MCWIT_DIMENSION_MISMATCH = 2,
    MCWIT_NOT_HERMITIAN = 3,
    MCWIT_NO_CONVERGENCE = 4,
    MCWIT_SINGULAR = 5,
    MCWIT_OUT_OF_RANGE = 6,
    MCWIT_NO_SIGN_CHANGE = 7,
    MCWIT_IMAGINARY_RESIDUE = 8,
    MCWIT_PARSE_ERROR = 9,
    MCWIT_IO_ERROR = 10,
    MCWIT_INTERNAL_ERROR = 11
} mcwit_status;

typedef enum mcwit_measurement { MCWIT_MEASUREMENT_M_SMALL = 0, MCWIT_MEASUREMENT_M_LARGE = 1 } mcwit_measurement;

/* A Hermitian (or general) operator together with its subsystem dims. */
typedef struct mcwit_operator mcwit_operator;
/* A multi-copy witness assignment. */
typedef struct mcwit_wiring mcwit_wiring;
/* Ordered list of named text outputs (file name, contents). */
typedef struct mcwit_bundle mcwit_bundle;

MCWIT_API const char *mcwit_version(void);
MCWIT_API const char *mcwit_status_name(mcwit_status status);
MCWIT_API const char *mcwit_last_error(void);

/* ---- operators ---- */

/* Density matrix of a catalog family. `param` is ignored for fixed states. */
MCWIT_API mcwit_status mcwit_state_create(const char *family, double param, mcwit_operator **out);
/* Catalog witness. Pass has_b = 0 unless the witness takes b (P_b). */
MCWIT_API mcwit_status mcwit_witness_create(const char *name, int has_b, double b, mcwit_operator **out);
MCWIT_API mcwit_status mcwit_operator_create(const size_t *dims, size_t n_slots, const double *re_im,
                                             mcwit_operator **out);
MCWIT_API void mcwit_operator_destroy(mcwit_operator *op);

MCWIT_API mcwit_status mcwit_operator_dim(const mcwit_operator *op, size_t *dim);
MCWIT_API mcwit_status mcwit_operator_slots(const mcwit_operator *op, size_t *n_slots);
MCWIT_API mcwit_status mcwit_operator_slot_dim(const mcwit_operator *op, size_t slot, size_t *dim);
MCWIT_API mcwit_status mcwit_operator_entry(const mcwit_operator *op, size_t row, size_t col, double *re,
                                            double *im);
/* Copies 2 * dim * dim doubles into `re_im`. */
MCWIT_API mcwit_status mcwit_operator_copy(const mcwit_operator *op, double *re_im, size_t capacity);
MCWIT_API mcwit_status mcwit_operator_min_eigenvalue(const mcwit_operator *op, double *out);
/* Real part of Tr(a b). */
MCWIT_API mcwit_status mcwit_operator_trace_product(const mcwit_operator *a, const mcwit_operator *b, double *out);

MCWIT_API mcwit_status mcwit_tensor(const mcwit_operator *a, const mcwit_operator *b, mcwit_operator **out);
MCWIT_API mcwit_status mcwit_tensor_power(const mcwit_operator *op, size_t copies, mcwit_operator **out);
/* perm[old_slot] = new_slot. */
MCWIT_API mcwit_status mcwit_permute(const mcwit_operator *op, const size_t *perm, size_t n, mcwit_operator **out);
MCWIT_API mcwit_status mcwit_embed(const mcwit_operator *local, const size_t *slots, size_t n_slots,
                                   const size_t *full_dims, size_t n_full, mcwit_operator **out);
MCWIT_API mcwit_status mcwit_partial_trace(const mcwit_operator *op, const size_t *slots, size_t n,
                                           mcwit_operator **out);
MCWIT_API mcwit_status mcwit_partial_transpose(const mcwit_operator *op, const size_t *slots, size_t n,
                                               mcwit_operator **out);

/* ---- wirings ---- */

MCWIT_API mcwit_status mcwit_wiring_create(size_t copies, const size_t *base_dims, size_t n_parties,
                                           mcwit_wiring **out);
MCWIT_API void mcwit_wiring_destroy(mcwit_wiring *wiring);
/* Catalog witness on slots written as e.g. "A1B2" or "AB'". */
MCWIT_API mcwit_status mcwit_wiring_add(mcwit_wiring *wiring, const char *witness, int has_b, double b,
                                        const char *slots);
MCWIT_API mcwit_status mcwit_wiring_add_operator(mcwit_wiring *wiring, const char *label, const mcwit_operator *op,
                                                 const char *slots);
MCWIT_API mcwit_status mcwit_wiring_assemble(const mcwit_wiring *wiring, mcwit_operator **out);
/* Tr(W rho^{x copies}); rho must be a density matrix on the base dims. */
MCWIT_API mcwit_status mcwit_wiring_expectation(const mcwit_wiring *wiring, const mcwit_operator *rho, double *out);
/* Writes a NUL-terminated description into buf; *needed gets the full length + 1. */
MCWIT_API mcwit_status mcwit_wiring_describe(const mcwit_wiring *wiring, char *buf, size_t capacity,
                                             size_t *needed);
/* Sign-change thresholds of the wiring over a family on a uniform grid.
 * Up to `capacity` roots are written; *count receives the total. */
MCWIT_API mcwit_status mcwit_wiring_thresholds(const mcwit_wiring *wiring, const char *family, size_t points,
                                               double *roots, size_t capacity, size_t *count);

/* ---- criteria ---- */

/* *npt is 1 when the partial transpose has an eigenvalue below -1e-9. */
MCWIT_API mcwit_status mcwit_ppt_check(const mcwit_operator *rho, const size_t *slots, size_t n, double *min_eig,
                                       int *npt);
MCWIT_API mcwit_status mcwit_ppt_threshold(const char *family, const size_t *slots, size_t n, double *root);
MCWIT_API mcwit_status mcwit_find_threshold(double (*f)(double, void *), void *ctx, double lo, double hi,
                                            double tol, double *root);
MCWIT_API mcwit_status mcwit_closed_form(const char *name, double param, int has_b, double b, double *out);

typedef struct mcwit_validation {
    double min_eigenvalue;
    double min_product_expectation;
    int is_witness; /* 0 for positive semidefinite operators */
    int pass;
} mcwit_validation;

MCWIT_API mcwit_status mcwit_validate_witness(const char *name, int has_b, double b, uint64_t samples, uint64_t seed,
                                              mcwit_validation *out);

typedef struct mcwit_concentration {
    double probability;
    double fidelity;
    double bookkeeping_probability;
    double bookkeeping_ratio;
    double consistency_lhs;
    double consistency_rhs;
    double consistency_delta;
} mcwit_concentration;

/* Psi given as d x d interleaved complex, Tr(Psi^dagger Psi) = 1. */
MCWIT_API mcwit_status mcwit_concentrate(const double *psi_re_im, size_t d, mcwit_measurement kind,
                                         mcwit_concentration *out);

/* ---- text front ends ---- */

MCWIT_API void mcwit_bundle_destroy(mcwit_bundle *bundle);
MCWIT_API size_t mcwit_bundle_count(const mcwit_bundle *bundle);
MCWIT_API const char *mcwit_bundle_name(const mcwit_bundle *bundle, size_t index);
MCWIT_API const char *mcwit_bundle_text(const mcwit_bundle *bundle, size_t index);
/* 1 when every check behind the bundle passed. */
MCWIT_API int mcwit_bundle_all_pass(const mcwit_bundle *bundle);

/* ids: ex1 ex2 ex3 ex4 ex5 ghz concentration. First entry is the JSON report. */
MCWIT_API mcwit_status mcwit_reproduce(const char *id, uint64_t seed, mcwit_bundle **out);
/* Newline-separated list of reproduction ids. */
MCWIT_API const char *mcwit_reproduction_ids(void);
/* points = 0 keeps the scenario's grid. */
MCWIT_API mcwit_status mcwit_sweep_scenario(const char *scenario_text, size_t points, mcwit_bundle **out);
/* Canonical text of a scenario (single entry "scenario.json"). */
MCWIT_API mcwit_status mcwit_scenario_canonical(const char *scenario_text, mcwit_bundle **out);
/* format: "csv" or "json". has_value = 0 asks for the threshold. */
MCWIT_API mcwit_status mcwit_ppt_report(const char *family, const size_t *slots, size_t n, int has_value,
                                        double value, const char *format, mcwit_bundle **out);
MCWIT_API mcwit_status mcwit_validate_report(const char *witness, int has_b, double b, uint64_t samples,
                                             uint64_t seed, const char *format, mcwit_bundle **out);
MCWIT_API mcwit_status mcwit_concentrate_report(size_t d, mcwit_measurement kind, size_t samples, uint64_t seed,
                                                const char *format, mcwit_bundle **out);

#ifdef __cplusplus
}
#endif

#endif /* MCWIT_MCWIT_H */
