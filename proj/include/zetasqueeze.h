/* zetasqueeze — exact identity checks and certified numeric enclosures for
 * even zeta constants, behind a C ABI.
 *
 * Conventions:
 *   - every fallible function returns a zs_status; ZS_OK is 0
 *   - output parameters are written only on ZS_OK
 *   - strings returned through char** are heap-allocated; release them with
 *     zs_string_free
 *   - eigenvalue/angle buffers are caller-allocated with length n
 *   - zs_run_config / zs_report are opaque handles with _create/_destroy
 */

#ifndef ZETASQUEEZE_H
#define ZETASQUEEZE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32) || defined(__CYGWIN__)
#  define ZS_API __declspec(dllexport)
#else
#  define ZS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zs_status {
  ZS_OK = 0,
  ZS_ERROR_NULL_POINTER = 1,
  ZS_ERROR_INVALID_ARGUMENT = 2,
  ZS_ERROR_CAP_EXCEEDED = 3,
  ZS_ERROR_POLE = 4,
  ZS_ERROR_NO_CONVERGENCE = 5,
  ZS_ERROR_INTERNAL = 6
} zs_status;

ZS_API const char* zs_version_string(void);

/* Stable name of a status code, e.g. "ZS_ERROR_INVALID_ARGUMENT". */
ZS_API const char* zs_status_name(zs_status status);

/* Message describing the most recent error on this thread; empty string if
 * none. The pointer stays valid until the next failing call on the thread. */
ZS_API const char* zs_last_error_message(void);

ZS_API void zs_string_free(char* s);

/* ----- exact matrices ---------------------------------------------------
 * Kind 'A': dense symmetric matrix with entry(i,j) = n+1-max(i,j).
 * Kind 'B': its tridiagonal inverse, diagonal (1,2,...,2), off-diagonals -1.
 * Indices are 1-based. */

ZS_API zs_status zs_matrix_entry(uint64_t n, char kind, uint64_t i, uint64_t j,
                                 int64_t* out_entry);

/* out_ok = 1 iff A_n * B_n is exactly the identity. */
ZS_API zs_status zs_verify_inverse(uint64_t n, int* out_ok);

/* Exact tr(A_n^p) as a decimal string. Powers >= 3 enforce n <= n_cap
 * (pass 0 for the default cap of 512). */
ZS_API zs_status zs_trace_power(uint64_t n, uint32_t p, uint64_t n_cap,
                                char** out_value);

/* ----- determinant D_n(theta) = det(4 sin^2(theta) I - B_n) ------------- */

ZS_API zs_status zs_det_recurrence(uint64_t n, double theta, double* out_value);
ZS_API zs_status zs_det_closed_form(uint64_t n, double theta,
                                    double* out_value);

/* out_ok = 1 iff the closed form vanishes (|.| <= 1e-9) at all n grid angles
 * and the values 4 sin^2(theta_k) are pairwise separated by > 1e-12. */
ZS_API zs_status zs_verify_zero_set(uint64_t n, int* out_ok);

/* ----- spectrum ---------------------------------------------------------- */

/* Writes theta_k = ((2k-1)/(2n+1)) * (pi/2), k = 1..n, ascending. */
ZS_API zs_status zs_theta_grid(uint64_t n, double* out_angles);

/* Closed-form eigenvalues, ascending; kind as above. */
ZS_API zs_status zs_eigenvalues_closed_form(uint64_t n, char kind,
                                            double* out_eigenvalues);

/* Eigenvalues of the kind-B matrix by Sturm-sequence bisection, ascending. */
ZS_API zs_status zs_eigenvalues_bisection(uint64_t n, double* out_eigenvalues);

/* Max elementwise |closed form - bisection| over the kind-B spectrum. */
ZS_API zs_status zs_spectrum_max_abs_error(uint64_t n, double* out_error);

/* ----- cotangent power sums ----------------------------------------------
 * S_p(n) = sum_k cot^{2p}(theta_k), exact via the trace expansion. */

ZS_API zs_status zs_power_sum(uint64_t n, uint32_t p, uint64_t n_cap,
                              char** out_numerator, char** out_denominator);

/* Exact sweep of S_1(n) = 2n^2+n for n <= n_max. */
ZS_API zs_status zs_verify_cot_square_identity(uint64_t n_max, int* out_ok);

/* Exact sweep of 3 S_2(n) = 8n^4+16n^3+4n^2-n for n <= n_max. */
ZS_API zs_status zs_verify_cot_fourth_identity(uint64_t n_max, int* out_ok);

/* ----- squeeze bounds ----------------------------------------------------- */

/* sum_{k<=n} 1/(2k-1)^{2p}, compensated summation. */
ZS_API zs_status zs_odd_partial_sum(uint64_t n, uint32_t p, double* out_value);

/* Bounds bracketing the finite odd partial sum at grid size n. */
ZS_API zs_status zs_odd_sum_enclosure(uint64_t n, uint32_t p, uint64_t n_cap,
                                      double* out_lower, double* out_upper);

/* Bounds bracketing zeta(2p). */
ZS_API zs_status zs_zeta_enclosure(uint64_t n, uint32_t p, uint64_t n_cap,
                                   double* out_lower, double* out_upper);

/* ----- report runs (opaque handles) --------------------------------------- */

typedef struct zs_run_config zs_run_config;
typedef struct zs_report zs_report;

/* command: "verify" | "spectrum" | "sums" | "zeta" | "all". */
ZS_API zs_status zs_run_config_create(const char* command,
                                      zs_run_config** out_config);
ZS_API void zs_run_config_destroy(zs_run_config* config);

ZS_API zs_status zs_run_config_set_n(zs_run_config* config, uint64_t n);
ZS_API zs_status zs_run_config_set_n_max(zs_run_config* config, uint64_t n_max);
ZS_API zs_status zs_run_config_set_p(zs_run_config* config, uint32_t p);
ZS_API zs_status zs_run_config_set_ladder(zs_run_config* config,
                                          const uint64_t* values, size_t count);
/* format: "table" | "csv" | "json". */
ZS_API zs_status zs_run_config_set_format(zs_run_config* config,
                                          const char* format);
ZS_API zs_status zs_run_config_set_seed(zs_run_config* config, uint64_t seed);
ZS_API zs_status zs_run_config_set_det_tolerance(zs_run_config* config,
                                                 double tolerance);
ZS_API zs_status zs_run_config_set_trace_cap(zs_run_config* config,
                                             uint64_t n_cap);

ZS_API zs_status zs_run(const zs_run_config* config, zs_report** out_report);
ZS_API void zs_report_destroy(zs_report* report);

/* 1 iff every check in the report passed. */
ZS_API int zs_report_all_passed(const zs_report* report);
ZS_API size_t zs_report_check_count(const zs_report* report);
ZS_API size_t zs_report_failed_count(const zs_report* report);

/* Render with the config's format, or pass an explicit format name. */
ZS_API zs_status zs_report_render(const zs_report* report, const char* format,
                                  char** out_text);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ZETASQUEEZE_H */
