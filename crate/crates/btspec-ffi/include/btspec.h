#ifndef BTSPEC_H
#define BTSPEC_H

/* Generated by cbindgen; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BtspecBc {
  BTSPEC_BC_DIRICHLET = 0,
  BTSPEC_BC_NEUMANN = 1,
  BTSPEC_BC_ROBIN = 2,
  BTSPEC_BC_TRANSMISSION = 3,
} BtspecBc;

typedef enum BtspecStatus {
  BTSPEC_STATUS_OK = 0,
  BTSPEC_STATUS_NULL_POINTER = 1,
  BTSPEC_STATUS_INVALID_ARGUMENT = 2,
  BTSPEC_STATUS_OUT_OF_RANGE = 3,
  BTSPEC_STATUS_NO_CONVERGENCE = 4,
  BTSPEC_STATUS_TRUNCATION = 5,
  BTSPEC_STATUS_HYPOTHESIS = 6,
  BTSPEC_STATUS_IO = 7,
  BTSPEC_STATUS_PANIC = 8,
} BtspecStatus;

typedef struct BtspecDomain BtspecDomain;

typedef struct BtspecProblem BtspecProblem;

typedef struct BtspecSpectrum BtspecSpectrum;

typedef struct BtspecComplex {
  double re;
  double im;
} BtspecComplex;

/**
 * Taylor coefficients of V at a localization point; `interior` selects the
 * side of the normal (nonzero: domain on the inner side).
 */
typedef struct BtspecLocalModel {
  double v00;
  double v01;
  double v11;
  double v20;
  double v02;
  double curvature;
  int32_t interior;
} BtspecLocalModel;

/**
 * lambda ~ offset + c23 h^{2/3} + c1 h + c43 h^{4/3}
 */
typedef struct BtspecExpansion {
  struct BtspecComplex offset;
  struct BtspecComplex c23;
  struct BtspecComplex c1;
  struct BtspecComplex c43;
} BtspecExpansion;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread; valid until the next failure.
 */
const char *btspec_last_error(void);

const char *btspec_version(void);

/**
 * Ai(z) and Ai'(z).
 *
 * # Safety
 * `ai` and `aip` must be valid writable pointers.
 */
enum BtspecStatus btspec_airy(struct BtspecComplex z,
                              struct BtspecComplex *ai,
                              struct BtspecComplex *aip);

/**
 * n-th zero of Ai (negative), n >= 1.
 *
 * # Safety
 * `value` must be a valid writable pointer.
 */
enum BtspecStatus btspec_airy_zero(size_t n, double *value);

/**
 * n-th zero of Ai' (negative), n >= 1.
 *
 * # Safety
 * `value` must be a valid writable pointer.
 */
enum BtspecStatus btspec_airy_prime_zero(size_t n, double *value);

/**
 * lambda0 of the 1D complex Airy problem with slope v01.
 *
 * # Safety
 * `lambda0` must be a valid writable pointer.
 */
enum BtspecStatus btspec_eigenvalue_1d(enum BtspecBc bc,
                                       double kappa,
                                       size_t n,
                                       double v01,
                                       struct BtspecComplex *lambda0);

/**
 * Four-term expansion; a finite `kappa_hat >= 0` selects the scaled regime
 * for Robin/transmission, NaN the fixed one.
 *
 * # Safety
 * `model` must be readable and `result` writable.
 */
enum BtspecStatus btspec_four_term(const struct BtspecLocalModel *model,
                                   enum BtspecBc bc,
                                   double kappa,
                                   double kappa_hat,
                                   size_t n,
                                   size_t k,
                                   struct BtspecExpansion *result);

/**
 * # Safety
 * `domain` must be a valid writable pointer.
 */
enum BtspecStatus btspec_domain_disk(double r0,
                                     enum BtspecBc bc,
                                     double kappa,
                                     struct BtspecDomain **domain);

/**
 * # Safety
 * `domain` must be a valid writable pointer.
 */
enum BtspecStatus btspec_domain_annulus(double r1,
                                        double r2,
                                        enum BtspecBc outer,
                                        double outer_kappa,
                                        enum BtspecBc inner,
                                        double inner_kappa,
                                        struct BtspecDomain **domain);

/**
 * Disk of radius r1 inside an annulus up to r2, coupled by a transmission condition.
 *
 * # Safety
 * `domain` must be a valid writable pointer.
 */
enum BtspecStatus btspec_domain_two_layer(double r1,
                                          double r2,
                                          enum BtspecBc outer,
                                          double outer_kappa,
                                          double kappa,
                                          struct BtspecDomain **domain);

/**
 * # Safety
 * `area` must be a valid writable pointer.
 */
enum BtspecStatus btspec_domain_area(const struct BtspecDomain *domain, double *area);

/**
 * # Safety
 * `domain` must come from a `btspec_domain_*` constructor or be null.
 */
void btspec_domain_free(struct BtspecDomain *domain);

/**
 * Galerkin matrix with `m` basis functions. `kappa_hat` NaN uses the fixed
 * coupling; otherwise every boundary parameter enters as kappa_hat h^2.
 *
 * # Safety
 * `domain` must be a live handle and `problem` writable.
 */
enum BtspecStatus btspec_problem_assemble(const struct BtspecDomain *domain,
                                          double h,
                                          size_t m,
                                          double kappa_hat,
                                          bool allow_under_resolved,
                                          struct BtspecProblem **problem);

/**
 * # Safety
 * `problem` must be a live handle; outputs writable.
 */
enum BtspecStatus btspec_problem_info(const struct BtspecProblem *problem,
                                      size_t *size,
                                      double *ratio);

/**
 * Writes the binary matrix dump to `path` (NUL-terminated UTF-8).
 *
 * # Safety
 * `problem` must be a live handle and `path` a valid C string.
 */
enum BtspecStatus btspec_problem_dump(const struct BtspecProblem *problem, const char *path);

/**
 * # Safety
 * `problem` must come from `btspec_problem_assemble` or be null.
 */
void btspec_problem_free(struct BtspecProblem *problem);

/**
 * The `count` eigenvalues of smallest real part.
 *
 * # Safety
 * `problem` must be a live handle and `spectrum` writable.
 */
enum BtspecStatus btspec_problem_solve(const struct BtspecProblem *problem,
                                       size_t count,
                                       bool with_vectors,
                                       struct BtspecSpectrum **spectrum);

/**
 * Number of eigenvalues held; 0 for a null handle.
 *
 * # Safety
 * `spectrum` must be a live handle or null.
 */
size_t btspec_spectrum_len(const struct BtspecSpectrum *spectrum);

/**
 * # Safety
 * `spectrum` must be a live handle and `value` writable.
 */
enum BtspecStatus btspec_spectrum_eigenvalue(const struct BtspecSpectrum *spectrum,
                                             size_t index,
                                             struct BtspecComplex *value);

/**
 * Copies eigenvector `index` (basis coefficients) into `buf` of length `len`,
 * which must equal the basis size.
 *
 * # Safety
 * `spectrum` must be a live handle and `buf` writable for `len` elements.
 */
enum BtspecStatus btspec_spectrum_vector(const struct BtspecSpectrum *spectrum,
                                         size_t index,
                                         struct BtspecComplex *buf,
                                         size_t len);

/**
 * # Safety
 * `spectrum` must come from `btspec_problem_solve` or be null.
 */
void btspec_spectrum_free(struct BtspecSpectrum *spectrum);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* BTSPEC_H */
