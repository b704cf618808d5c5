/* C interface to the akor regulator-synthesis library.
 *
 * Every function returns an akor_status. Objects are opaque handles created by
 * akor_*_create and released by the matching akor_*_destroy. Array getters
 * follow one convention: pass `out == NULL` to query the element count in
 * `*len`; otherwise `cap` is the capacity of `out` and AKOR_BUFFER_TOO_SMALL is
 * returned (with `*len` set) when it is insufficient. Complex values are
 * returned as interleaved (re, im) pairs, so a buffer of `2 * len` doubles.
 *
 * The message of the last failure on the calling thread is available from
 * akor_last_error().
 */
#ifndef AKOR_AKOR_H
#define AKOR_AKOR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(AKOR_BUILDING_LIBRARY)
#    define AKOR_API __declspec(dllexport)
#  else
#    define AKOR_API __declspec(dllimport)
#  endif
#else
#  define AKOR_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum akor_status {
  AKOR_OK = 0,
  AKOR_INVALID_ARGUMENT = 1,
  AKOR_DIMENSION_MISMATCH = 2,
  AKOR_BUFFER_TOO_SMALL = 3,
  AKOR_NON_ODD_ORDER = 10,
  AKOR_IMAGINARY_AXIS_EIGENVALUE = 11,
  AKOR_SINGULAR_T1 = 12,
  AKOR_NO_CONVERGENCE = 13,
  AKOR_DEGENERATE_ROOTS = 14,
  AKOR_VANISHING_MODE_VALUE = 15,
  AKOR_INTERNAL_ERROR = 99
} akor_status;

/* Name of a status, e.g. "ImaginaryAxisEigenvalue". */
AKOR_API const char* akor_status_name(akor_status status);
/* Nonzero for failures of the numerics (codes 10..15). */
AKOR_API int akor_status_is_numerical(akor_status status);
/* Message of the last failure on this thread; empty after a success. */
AKOR_API const char* akor_last_error(void);

typedef enum akor_plant_kind {
  AKOR_PLANT_SECOND_ORDER = 0, /* y'' + a D^alpha y + b y = u */
  AKOR_PLANT_FIRST_ORDER = 1   /* D^alpha y = beta y + u */
} akor_plant_kind;

typedef enum akor_solver {
  AKOR_SOLVER_SPECTRAL = 0,
  AKOR_SOLVER_SIGN = 1
} akor_solver;

typedef enum akor_verdict {
  AKOR_VERDICT_HOLDS = 0,
  AKOR_VERDICT_FAILS = 1,
  AKOR_VERDICT_MARGINAL = 2
} akor_verdict;

/* ---- orders and plant data ------------------------------------------- */

AKOR_API akor_status akor_make_order(int64_t num, int64_t den, int64_t* p, int64_t* q,
                                     int* is_odd);
AKOR_API akor_status akor_odd_approximate(int64_t num, int64_t den, double tol, int64_t* p,
                                          int64_t* q);
AKOR_API akor_status akor_plant_coeffs_physical(double m, double s, double rho, double mu,
                                                double k, double* a, double* b);

/* ---- synthesis --------------------------------------------------------- */

typedef struct akor_design_params {
  akor_plant_kind kind;
  int64_t num;
  int64_t den;
  double a;    /* second-order damping coefficient */
  double b;    /* second-order stiffness coefficient */
  double beta; /* first-order plant coefficient */
  double qw;
  double rw;
  int approximate; /* nonzero: replace a non-odd order within odd_tol */
  double odd_tol;
  akor_solver solver;
} akor_design_params;

/* Fills the defaults: second order, alpha = 1/3, a = b = 0, qw = rw = 1,
 * approximation on with tolerance 1e-3, spectral solver. */
AKOR_API void akor_design_params_init(akor_design_params* params);

typedef struct akor_design_s* akor_design;
typedef struct akor_modes_s* akor_modes;

AKOR_API akor_status akor_design_create(const akor_design_params* params, akor_design* out);
AKOR_API void akor_design_destroy(akor_design design);

AKOR_API akor_status akor_design_orders(akor_design design, int64_t* req_p, int64_t* req_q,
                                        int64_t* eff_p, int64_t* eff_q);
/* Dimension of the synthesis state (2q for the oscillator, 1 for first order). */
AKOR_API akor_status akor_design_dimension(akor_design design, size_t* n);
AKOR_API akor_status akor_design_plant(akor_design design, double* a, double* b);
AKOR_API akor_status akor_design_gains(akor_design design, double* out, size_t cap, size_t* len);
/* c_0 .. c_{N-1} of the closed-loop scalar equation. */
AKOR_API akor_status akor_design_closed_loop(akor_design design, double* out, size_t cap,
                                             size_t* len);
/* Monic characteristic polynomial, highest power first (N + 1 entries). */
AKOR_API akor_status akor_design_char_poly(akor_design design, double* out, size_t cap,
                                           size_t* len);
/* Row-major n x n Riccati solution. */
AKOR_API akor_status akor_design_riccati(akor_design design, double* out, size_t cap,
                                         size_t* len);
AKOR_API akor_status akor_design_residual(akor_design design, double* residual);
/* Stable Hamiltonian eigenvalues (spectral solver only; len 0 otherwise). */
AKOR_API akor_status akor_design_stable_eigenvalues(akor_design design, double* out, size_t cap,
                                                    size_t* len);
AKOR_API akor_status akor_design_modes(akor_design design, akor_modes* out);
AKOR_API akor_status akor_design_step(akor_design design, int64_t* num, int64_t* den);

/* ---- modes ------------------------------------------------------------- */

/* Roots of a monic polynomial (highest power first) in the D^{1/q} variable. */
AKOR_API akor_status akor_modes_from_poly(const double* coeffs, size_t len, int64_t q,
                                          akor_modes* out);
AKOR_API void akor_modes_destroy(akor_modes modes);
AKOR_API akor_status akor_modes_roots(akor_modes modes, double* out, size_t cap, size_t* len);
/* Per-root flags: re_negative[i] = Re lambda < 0, decay[i] = Re lambda^q < 0.
 * Either output pointer may be NULL. */
AKOR_API akor_status akor_modes_flags(akor_modes modes, int* re_negative, int* decay, size_t cap,
                                      size_t* len);
AKOR_API akor_status akor_modes_stability(akor_modes modes, akor_verdict* paper_criterion,
                                          akor_verdict* mode_decay, size_t* marginal_count);

/* ---- solutions and responses ------------------------------------------ */

typedef struct akor_solution_s* akor_solution;

/* Oscillator: y(x0) = 0, y'(x0) = value, other fractional derivatives zero.
 * First-order plant: real mode with y(x0) = value. */
AKOR_API akor_status akor_solution_create(akor_design design, double x0, double value,
                                          akor_solution* out);
AKOR_API void akor_solution_destroy(akor_solution solution);
AKOR_API akor_status akor_solution_eval(akor_solution solution, double x, double* y,
                                        double* imag_residue);
AKOR_API akor_status akor_solution_coefficients(akor_solution solution, double* out, size_t cap,
                                                size_t* len);

typedef struct akor_trajectory_s* akor_trajectory;

AKOR_API akor_status akor_respond(akor_design design, akor_solution solution, double x_start,
                                  double x_end, int n, akor_trajectory* out);
AKOR_API void akor_trajectory_destroy(akor_trajectory traj);
/* Samples as (x, y, u) triples: a buffer of 3 * len doubles. */
AKOR_API akor_status akor_trajectory_samples(akor_trajectory traj, double* out, size_t cap,
                                             size_t* len);
AKOR_API akor_status akor_trajectory_cost(akor_trajectory traj, double qw, double rw,
                                          double* value, int* tail_warning);
AKOR_API akor_status akor_trajectory_decay(akor_trajectory traj, double* sup_tail,
                                           int* monotone_envelope);

/* ---- fractional exponentials ------------------------------------------ */

AKOR_API akor_status akor_frac_exp_series(double lambda_re, double lambda_im, double x, int64_t q,
                                          double tol, double* re, double* im);
AKOR_API akor_status akor_frac_exp_closed(double lambda_re, double lambda_im, double x, int64_t q,
                                          double* re, double* im);
AKOR_API akor_status akor_weak_singular_integral(double mu_re, double mu_im, double x,
                                                 double gamma, double* re, double* im);

#ifdef __cplusplus
}
#endif

#endif /* AKOR_AKOR_H */
