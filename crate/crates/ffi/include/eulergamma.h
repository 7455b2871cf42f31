#ifndef EULERGAMMA_H
#define EULERGAMMA_H

/* Generated by cbindgen from eulergamma-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status of a library call.
 */
typedef enum EgStatus {
  EG_STATUS_OK = 0,
  /**
   * Argument outside the operation's domain.
   */
  EG_STATUS_DOMAIN = 1,
  /**
   * Evaluation at a pole of the factorial.
   */
  EG_STATUS_POLE = 2,
  /**
   * Requested index beyond a table capacity.
   */
  EG_STATUS_CAPACITY = 3,
  /**
   * Budget exhausted before convergence.
   */
  EG_STATUS_BUDGET = 4,
  /**
   * Iteration failed to converge.
   */
  EG_STATUS_NON_CONVERGENCE = 5,
  /**
   * Incomplete caller-supplied specification.
   */
  EG_STATUS_SPECIFICATION = 6,
  /**
   * Curvature undefined (vanishing second derivative).
   */
  EG_STATUS_DEGENERATE_CURVATURE = 7,
  /**
   * Fractional-derivative order at a denominator pole.
   */
  EG_STATUS_DEGENERATE_ORDER = 8,
  /**
   * Overflow risk in an alternating power sum.
   */
  EG_STATUS_OVERFLOW = 9,
  /**
   * Null pointer or unparseable string argument.
   */
  EG_STATUS_INVALID_ARGUMENT = 10,
} EgStatus;

/**
 * Opaque evaluation report (value, truncation index, error estimate).
 */
typedef struct EgReport EgReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Human-readable name of a status code (static storage, never freed).
 */
const char *eg_status_name(enum EgStatus status);

/**
 * x! = Gamma(x+1).
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_factorial(double x, double *out);

/**
 * log(x!) by a named representation ("F1".."F7", "gauss_limit",
 * "weierstrass", "integral_exp", "integral_log", "auto"); `terms` = 0 picks
 * the method's asymptotic/default truncation where applicable.
 *
 * # Safety
 * `method` must be a NUL-terminated string; `out` receives an owned report
 * pointer that the caller must pass to [`eg_report_free`].
 */
enum EgStatus eg_log_factorial(double x,
                               const char *method,
                               uintptr_t terms,
                               struct EgReport **out);

/**
 * # Safety
 * `report` must be a live pointer from this library.
 */
double eg_report_value(const struct EgReport *report);

/**
 * # Safety
 * `report` must be a live pointer from this library.
 */
double eg_report_error_estimate(const struct EgReport *report);

/**
 * # Safety
 * `report` must be a live pointer from this library.
 */
uintptr_t eg_report_terms(const struct EgReport *report);

/**
 * Release a report returned by [`eg_log_factorial`]. Null is ignored.
 *
 * # Safety
 * `report` must be a pointer previously returned by this library and not
 * yet freed.
 */
void eg_report_free(struct EgReport *report);

/**
 * B(x, y) through the gamma route.
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_beta(double x, double y, double *out);

/**
 * Gamma(x) Gamma(1-x).
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_gamma_reflection(double x, double *out);

/**
 * Alternating m-th difference sum of x^(m+lambda): direct summation.
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_diff_sum_direct(uint32_t m, uint32_t lambda, double x, double *out);

/**
 * Alternating m-th difference sum: closed-form transform evaluation.
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_diff_sum_closed(uint32_t m, uint32_t lambda, double x, double *out);

/**
 * Smallest-ordinate point of Gamma(x+1) on (0, 1): abscissa, ordinate and
 * curvature radius.
 *
 * # Safety
 * All three out pointers must be writable.
 */
enum EgStatus eg_find_minimum(double tol, double *out_x, double *out_y, double *out_radius);

/**
 * Euler-Mascheroni constant: route 0 = alternating zeta series,
 * 1 = shifted zeta series, 2 = integral.
 *
 * # Safety
 * `out` must point to writable memory for one double.
 */
enum EgStatus eg_euler_gamma(uint32_t route, uintptr_t terms, double *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* EULERGAMMA_H */
