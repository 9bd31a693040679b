/*
 Copyright 2026 The gpgcd Authors
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

#ifndef GPGCD_GPGCD_H
#define GPGCD_GPGCD_H

/*
 * C interface to the gpgcd library: approximate GCD of univariate
 * polynomials with complex coefficients.
 *
 * Objects are opaque handles created and destroyed by the library. Every
 * fallible function returns a gpgcd_status; on failure a description is
 * available from gpgcd_last_error() on the calling thread until the next
 * call into the library from that thread.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GPGCD_BUILDING_LIBRARY)
#    define GPGCD_API __declspec(dllexport)
#  else
#    define GPGCD_API __declspec(dllimport)
#  endif
#else
#  define GPGCD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gpgcd_status {
    GPGCD_OK = 0,
    GPGCD_ERR_ARGUMENT = 1,        /* bad degrees, sizes, null pointers, non-finite input */
    GPGCD_ERR_NUMERIC = 2,         /* factorization failure, rank-deficient least squares */
    GPGCD_ERR_RANK_DEFICIENT = 3,  /* constraint Jacobian lost full row rank */
    GPGCD_ERR_NO_CONVERGENCE = 4,  /* iteration cap reached */
    GPGCD_ERR_RECOVERY = 5,        /* GCD could not be recovered from the final state */
    GPGCD_ERR_BUFFER_TOO_SMALL = 6,
    GPGCD_ERR_INTERNAL = 7
} gpgcd_status;

typedef enum gpgcd_candidate {
    GPGCD_CANDIDATE_FROM_A = 0,  /* H solved from G~ = H A */
    GPGCD_CANDIDATE_FROM_B = 1   /* H solved from F~ = H B */
} gpgcd_candidate;

typedef enum gpgcd_format { GPGCD_FORMAT_CSV = 0, GPGCD_FORMAT_JSON = 1 } gpgcd_format;

typedef struct gpgcd_poly gpgcd_poly;
typedef struct gpgcd_result gpgcd_result;

typedef struct gpgcd_config {
    double epsilon;        /* stop threshold on the step 2-norm, default 1e-8 */
    int max_iterations;    /* default 50 */
    double rank_tolerance; /* sigma_min/sigma_max floor for the Jacobian, default 1e-12 */
} gpgcd_config;

typedef struct gpgcd_instance_params {
    int m, n, d;
    double e_f, e_g;     /* noise 2-norms */
    double coeff_range;  /* coefficients drawn from [-coeff_range, coeff_range] */
    uint64_t seed;
    int real_only;       /* nonzero: real coefficients only */
} gpgcd_instance_params;

typedef struct gpgcd_experiment_record {
    gpgcd_instance_params params;
    int trials;
    double mean_error;        /* NaN when no trial converged */
    double mean_iterations;
    double mean_time_s;
    double convergence_rate;
} gpgcd_experiment_record;

GPGCD_API const char* gpgcd_version(void);
GPGCD_API const char* gpgcd_last_error(void);
GPGCD_API const char* gpgcd_status_name(gpgcd_status status);

/* Polynomials. Coefficients are in ascending degree order; `im` may be NULL. */
GPGCD_API gpgcd_status gpgcd_poly_create(const double* re, const double* im, size_t degree,
                                         gpgcd_poly** out);
GPGCD_API void gpgcd_poly_destroy(gpgcd_poly* p);
GPGCD_API size_t gpgcd_poly_degree(const gpgcd_poly* p);
/* Copies degree+1 coefficients; `capacity` is the length of re and im. */
GPGCD_API gpgcd_status gpgcd_poly_coeffs(const gpgcd_poly* p, double* re, double* im,
                                         size_t capacity);
GPGCD_API double gpgcd_poly_norm2_sq(const gpgcd_poly* p);

GPGCD_API void gpgcd_config_default(gpgcd_config* config);

/* Approximate GCD of degree d. `config` may be NULL for defaults. */
GPGCD_API gpgcd_status gpgcd_solve(const gpgcd_poly* f, const gpgcd_poly* g, int d,
                                   const gpgcd_config* config, gpgcd_result** out);
GPGCD_API void gpgcd_result_destroy(gpgcd_result* r);

/* Borrowed handles; valid until gpgcd_result_destroy. */
GPGCD_API const gpgcd_poly* gpgcd_result_gcd(const gpgcd_result* r);
GPGCD_API const gpgcd_poly* gpgcd_result_f_tilde(const gpgcd_result* r);
GPGCD_API const gpgcd_poly* gpgcd_result_g_tilde(const gpgcd_result* r);
GPGCD_API const gpgcd_poly* gpgcd_result_cofactor_a(const gpgcd_result* r);
GPGCD_API const gpgcd_poly* gpgcd_result_cofactor_b(const gpgcd_result* r);
GPGCD_API double gpgcd_result_perturbation(const gpgcd_result* r);
GPGCD_API int gpgcd_result_iterations(const gpgcd_result* r);
GPGCD_API double gpgcd_result_residual(const gpgcd_result* r);
GPGCD_API gpgcd_candidate gpgcd_result_candidate(const gpgcd_result* r);
GPGCD_API int gpgcd_result_degenerate_leading(const gpgcd_result* r);

/* Benchmark harness. */
GPGCD_API void gpgcd_instance_params_default(gpgcd_instance_params* p);
GPGCD_API gpgcd_status gpgcd_generate_instance(const gpgcd_instance_params* p, gpgcd_poly** f,
                                               gpgcd_poly** g);
GPGCD_API gpgcd_status gpgcd_run_batch(const gpgcd_instance_params* p, int trials,
                                       const gpgcd_config* config, int workers,
                                       gpgcd_experiment_record* out);
/*
 * Writes the record as CSV (header line + data line) or a JSON object into
 * `buf` including the terminating NUL. `*needed` receives the required size.
 * Returns GPGCD_ERR_BUFFER_TOO_SMALL if `capacity` is insufficient; `buf`
 * may be NULL to query the size.
 */
GPGCD_API gpgcd_status gpgcd_record_format(const gpgcd_experiment_record* r, gpgcd_format fmt,
                                           char* buf, size_t capacity, size_t* needed);

#ifdef __cplusplus
}
#endif

#endif /* GPGCD_GPGCD_H */
