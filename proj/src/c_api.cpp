#include "akor/akor.h"

#include <cmath>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "akor/error.hpp"
#include "akor/pipeline.hpp"

struct akor_design_s {
  akor::Design d;
};

struct akor_modes_s {
  akor::ModeSet modes;
  akor::StabilityReport report;
};

struct akor_solution_s {
  akor::SolutionRepresentation rep;
};

struct akor_trajectory_s {
  akor::Trajectory traj;
};

namespace {

thread_local std::string g_last_error;

akor_status map_code(akor::ErrorCode code) {
  switch (code) {
    case akor::ErrorCode::InvalidArgument: return AKOR_INVALID_ARGUMENT;
    case akor::ErrorCode::DimensionMismatch: return AKOR_DIMENSION_MISMATCH;
    case akor::ErrorCode::NonOddOrder: return AKOR_NON_ODD_ORDER;
    case akor::ErrorCode::ImaginaryAxisEigenvalue: return AKOR_IMAGINARY_AXIS_EIGENVALUE;
    case akor::ErrorCode::SingularT1: return AKOR_SINGULAR_T1;
    case akor::ErrorCode::NoConvergence: return AKOR_NO_CONVERGENCE;
    case akor::ErrorCode::DegenerateRoots: return AKOR_DEGENERATE_ROOTS;
    case akor::ErrorCode::VanishingModeValue: return AKOR_VANISHING_MODE_VALUE;
  }
  return AKOR_INTERNAL_ERROR;
}

akor_status fail(akor_status st, const std::string& msg) {
  g_last_error = msg;
  return st;
}

// Runs f, translating exceptions into status codes.
template <class Fn>
akor_status guarded(Fn&& f) noexcept {
  try {
    g_last_error.clear();
    return f();
  } catch (const akor::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(AKOR_INTERNAL_ERROR, "out of memory");
  } catch (const std::exception& e) {
    return fail(AKOR_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(AKOR_INTERNAL_ERROR, "unknown exception");
  }
}

akor_status null_arg(const char* what) {
  return fail(AKOR_INVALID_ARGUMENT, std::string("null argument: ") + what);
}

// Array-getter protocol: out == NULL queries the length.
akor_status copy_out(const std::vector<double>& v, double* out, size_t cap, size_t* len) {
  if (!len) return null_arg("len");
  *len = v.size();
  if (!out) return AKOR_OK;
  if (cap < v.size()) return fail(AKOR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return AKOR_OK;
}

akor_status copy_complex(const std::vector<std::complex<double>>& v, double* out, size_t cap,
                         size_t* len) {
  if (!len) return null_arg("len");
  *len = v.size();
  if (!out) return AKOR_OK;
  if (cap < 2 * v.size()) return fail(AKOR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < v.size(); ++i) {
    out[2 * i] = v[i].real();
    out[2 * i + 1] = v[i].imag();
  }
  return AKOR_OK;
}

akor_verdict map_verdict(akor::Verdict v) {
  switch (v) {
    case akor::Verdict::Holds: return AKOR_VERDICT_HOLDS;
    case akor::Verdict::Fails: return AKOR_VERDICT_FAILS;
    case akor::Verdict::Marginal: return AKOR_VERDICT_MARGINAL;
  }
  return AKOR_VERDICT_FAILS;
}

}  // namespace

extern "C" {

const char* akor_status_name(akor_status status) {
  switch (status) {
    case AKOR_OK: return "Ok";
    case AKOR_INVALID_ARGUMENT: return "InvalidArgument";
    case AKOR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case AKOR_BUFFER_TOO_SMALL: return "BufferTooSmall";
    case AKOR_NON_ODD_ORDER: return "NonOddOrder";
    case AKOR_IMAGINARY_AXIS_EIGENVALUE: return "ImaginaryAxisEigenvalue";
    case AKOR_SINGULAR_T1: return "SingularT1";
    case AKOR_NO_CONVERGENCE: return "NoConvergence";
    case AKOR_DEGENERATE_ROOTS: return "DegenerateRoots";
    case AKOR_VANISHING_MODE_VALUE: return "VanishingModeValue";
    case AKOR_INTERNAL_ERROR: return "InternalError";
  }
  return "Unknown";
}

int akor_status_is_numerical(akor_status status) {
  return status >= AKOR_NON_ODD_ORDER && status <= AKOR_VANISHING_MODE_VALUE;
}

const char* akor_last_error(void) { return g_last_error.c_str(); }

akor_status akor_make_order(int64_t num, int64_t den, int64_t* p, int64_t* q, int* is_odd) {
  return guarded([&] {
    const auto o = akor::make_order(num, den);
    if (p) *p = o.p();
    if (q) *q = o.q();
    if (is_odd) *is_odd = o.is_odd() ? 1 : 0;
    return AKOR_OK;
  });
}

akor_status akor_odd_approximate(int64_t num, int64_t den, double tol, int64_t* p, int64_t* q) {
  return guarded([&] {
    const auto o = akor::odd_approximate(akor::make_order(num, den), tol);
    if (p) *p = o.p();
    if (q) *q = o.q();
    return AKOR_OK;
  });
}

akor_status akor_plant_coeffs_physical(double m, double s, double rho, double mu, double k,
                                       double* a, double* b) {
  return guarded([&] {
    const auto c = akor::plant_coeffs(akor::PhysicalPlant{m, s, rho, mu, k});
    if (a) *a = c.a;
    if (b) *b = c.b;
    return AKOR_OK;
  });
}

void akor_design_params_init(akor_design_params* params) {
  if (!params) return;
  params->kind = AKOR_PLANT_SECOND_ORDER;
  params->num = 1;
  params->den = 3;
  params->a = 0.0;
  params->b = 0.0;
  params->beta = 0.0;
  params->qw = 1.0;
  params->rw = 1.0;
  params->approximate = 1;
  params->odd_tol = 1e-3;
  params->solver = AKOR_SOLVER_SPECTRAL;
}

akor_status akor_design_create(const akor_design_params* params, akor_design* out) {
  if (!params) return null_arg("params");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    akor::DesignRequest req;
    switch (params->kind) {
      case AKOR_PLANT_SECOND_ORDER: req.kind = akor::PlantKind::SecondOrder; break;
      case AKOR_PLANT_FIRST_ORDER: req.kind = akor::PlantKind::FirstOrder; break;
      default: return fail(AKOR_INVALID_ARGUMENT, "unknown plant kind");
    }
    switch (params->solver) {
      case AKOR_SOLVER_SPECTRAL: req.solver = akor::RiccatiSolver::Spectral; break;
      case AKOR_SOLVER_SIGN: req.solver = akor::RiccatiSolver::Sign; break;
      default: return fail(AKOR_INVALID_ARGUMENT, "unknown solver");
    }
    req.num = params->num;
    req.den = params->den;
    req.plant = akor::DirectPlant{params->a, params->b};
    req.beta = params->beta;
    req.weights = akor::CostWeights{params->qw, params->rw};
    if (params->approximate) {
      req.odd_tol = params->odd_tol;
    } else {
      req.odd_tol.reset();
    }
    *out = new akor_design_s{akor::design(req)};
    return AKOR_OK;
  });
}

void akor_design_destroy(akor_design design) { delete design; }

akor_status akor_design_orders(akor_design design, int64_t* req_p, int64_t* req_q,
                               int64_t* eff_p, int64_t* eff_q) {
  if (!design) return null_arg("design");
  if (req_p) *req_p = design->d.requested.p();
  if (req_q) *req_q = design->d.requested.q();
  if (eff_p) *eff_p = design->d.effective.p();
  if (eff_q) *eff_q = design->d.effective.q();
  g_last_error.clear();
  return AKOR_OK;
}

akor_status akor_design_dimension(akor_design design, size_t* n) {
  if (!design) return null_arg("design");
  if (!n) return null_arg("n");
  *n = static_cast<size_t>(design->d.system.dimension());
  return AKOR_OK;
}

akor_status akor_design_plant(akor_design design, double* a, double* b) {
  if (!design) return null_arg("design");
  if (a) *a = design->d.system.a;
  if (b) *b = design->d.system.b;
  return AKOR_OK;
}

akor_status akor_design_step(akor_design design, int64_t* num, int64_t* den) {
  if (!design) return null_arg("design");
  if (num) *num = design->d.system.step_numerator();
  if (den) *den = design->d.effective.q();
  return AKOR_OK;
}

akor_status akor_design_gains(akor_design design, double* out, size_t cap, size_t* len) {
  if (!design) return null_arg("design");
  const auto& K = design->d.law.gains;
  return copy_out(std::vector<double>(K.data(), K.data() + K.size()), out, cap, len);
}

akor_status akor_design_closed_loop(akor_design design, double* out, size_t cap, size_t* len) {
  if (!design) return null_arg("design");
  return copy_out(design->d.closed_loop.coeffs, out, cap, len);
}

akor_status akor_design_char_poly(akor_design design, double* out, size_t cap, size_t* len) {
  if (!design) return null_arg("design");
  return copy_out(design->d.characteristic, out, cap, len);
}

akor_status akor_design_riccati(akor_design design, double* out, size_t cap, size_t* len) {
  if (!design) return null_arg("design");
  const auto& S = design->d.riccati.S;
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(S.size()));
  for (Eigen::Index i = 0; i < S.rows(); ++i)
    for (Eigen::Index j = 0; j < S.cols(); ++j) flat.push_back(S(i, j));
  return copy_out(flat, out, cap, len);
}

akor_status akor_design_residual(akor_design design, double* residual) {
  if (!design) return null_arg("design");
  if (!residual) return null_arg("residual");
  *residual = design->d.riccati.residual;
  return AKOR_OK;
}

akor_status akor_design_stable_eigenvalues(akor_design design, double* out, size_t cap,
                                           size_t* len) {
  if (!design) return null_arg("design");
  if (!design->d.hamiltonian) return copy_complex({}, out, cap, len);
  return copy_complex(design->d.hamiltonian->stable_eigenvalues, out, cap, len);
}

akor_status akor_design_modes(akor_design design, akor_modes* out) {
  if (!design) return null_arg("design");
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = new akor_modes_s{design->d.modes, design->d.stability};
    return AKOR_OK;
  });
}

akor_status akor_modes_from_poly(const double* coeffs, size_t len, int64_t q, akor_modes* out) {
  if (!coeffs) return null_arg("coeffs");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    if (len < 2) return fail(AKOR_INVALID_ARGUMENT, "polynomial must have degree >= 1");
    if (q < 1) return fail(AKOR_INVALID_ARGUMENT, "q must be positive");
    if (coeffs[0] != 1.0) return fail(AKOR_INVALID_ARGUMENT, "polynomial must be monic");
    for (size_t i = 0; i < len; ++i)
      if (!std::isfinite(coeffs[i])) return fail(AKOR_INVALID_ARGUMENT, "non-finite coefficient");
    auto modes = akor::poly_roots(std::span<const double>(coeffs, len), q);
    auto report = akor::classify_stability(modes);
    *out = new akor_modes_s{std::move(modes), std::move(report)};
    return AKOR_OK;
  });
}

void akor_modes_destroy(akor_modes modes) { delete modes; }

akor_status akor_modes_roots(akor_modes modes, double* out, size_t cap, size_t* len) {
  if (!modes) return null_arg("modes");
  return copy_complex(modes->modes.roots, out, cap, len);
}

akor_status akor_modes_flags(akor_modes modes, int* re_negative, int* decay, size_t cap,
                             size_t* len) {
  if (!modes) return null_arg("modes");
  if (!len) return null_arg("len");
  const auto& flags = modes->modes.flags;
  *len = flags.size();
  if (!re_negative && !decay) return AKOR_OK;
  if (cap < flags.size()) return fail(AKOR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < flags.size(); ++i) {
    if (re_negative) re_negative[i] = flags[i].re_negative ? 1 : 0;
    if (decay) decay[i] = flags[i].decay ? 1 : 0;
  }
  return AKOR_OK;
}

akor_status akor_modes_stability(akor_modes modes, akor_verdict* paper_criterion,
                                 akor_verdict* mode_decay, size_t* marginal_count) {
  if (!modes) return null_arg("modes");
  if (paper_criterion) *paper_criterion = map_verdict(modes->report.paper_criterion);
  if (mode_decay) *mode_decay = map_verdict(modes->report.mode_decay);
  if (marginal_count) *marginal_count = modes->report.marginal_roots.size();
  return AKOR_OK;
}

akor_status akor_solution_create(akor_design design, double x0, double value,
                                 akor_solution* out) {
  if (!design) return null_arg("design");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    *out = new akor_solution_s{akor::initial_value_solution(design->d, x0, value)};
    return AKOR_OK;
  });
}

void akor_solution_destroy(akor_solution solution) { delete solution; }

akor_status akor_solution_eval(akor_solution solution, double x, double* y,
                               double* imag_residue) {
  if (!solution) return null_arg("solution");
  return guarded([&] {
    const auto v = akor::eval_solution_complex(solution->rep, x);
    if (y) *y = v.real();
    if (imag_residue) *imag_residue = v.imag();
    return AKOR_OK;
  });
}

akor_status akor_solution_coefficients(akor_solution solution, double* out, size_t cap,
                                       size_t* len) {
  if (!solution) return null_arg("solution");
  return copy_complex(solution->rep.coefficients, out, cap, len);
}

akor_status akor_respond(akor_design design, akor_solution solution, double x_start,
                         double x_end, int n, akor_trajectory* out) {
  if (!design) return null_arg("design");
  if (!solution) return null_arg("solution");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    auto traj = akor::respond(design->d.closed_loop, solution->rep, design->d.law,
                              akor::GridSpec{x_start, x_end, n});
    *out = new akor_trajectory_s{std::move(traj)};
    return AKOR_OK;
  });
}

void akor_trajectory_destroy(akor_trajectory traj) { delete traj; }

akor_status akor_trajectory_samples(akor_trajectory traj, double* out, size_t cap, size_t* len) {
  if (!traj) return null_arg("traj");
  if (!len) return null_arg("len");
  const auto& s = traj->traj.samples;
  *len = s.size();
  if (!out) return AKOR_OK;
  if (cap < 3 * s.size()) return fail(AKOR_BUFFER_TOO_SMALL, "output buffer too small");
  for (size_t i = 0; i < s.size(); ++i) {
    out[3 * i] = s[i].x;
    out[3 * i + 1] = s[i].y;
    out[3 * i + 2] = s[i].u;
  }
  return AKOR_OK;
}

akor_status akor_trajectory_cost(akor_trajectory traj, double qw, double rw, double* value,
                                 int* tail_warning) {
  if (!traj) return null_arg("traj");
  return guarded([&] {
    const auto c = akor::cost(traj->traj, akor::CostWeights{qw, rw});
    if (value) *value = c.value;
    if (tail_warning) *tail_warning = c.tail_warning ? 1 : 0;
    return AKOR_OK;
  });
}

akor_status akor_trajectory_decay(akor_trajectory traj, double* sup_tail,
                                  int* monotone_envelope) {
  if (!traj) return null_arg("traj");
  return guarded([&] {
    const auto m = akor::decay_metric(traj->traj);
    if (sup_tail) *sup_tail = m.sup_tail;
    if (monotone_envelope) *monotone_envelope = m.monotone_envelope ? 1 : 0;
    return AKOR_OK;
  });
}

akor_status akor_frac_exp_series(double lambda_re, double lambda_im, double x, int64_t q,
                                 double tol, double* re, double* im) {
  return guarded([&] {
    const auto v = akor::frac_exp_series({lambda_re, lambda_im}, x, q,
                                         tol > 0.0 ? tol : akor::kSeriesTolerance);
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return AKOR_OK;
  });
}

akor_status akor_frac_exp_closed(double lambda_re, double lambda_im, double x, int64_t q,
                                 double* re, double* im) {
  return guarded([&] {
    const auto v = akor::frac_exp_closed({lambda_re, lambda_im}, x, q);
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return AKOR_OK;
  });
}

akor_status akor_weak_singular_integral(double mu_re, double mu_im, double x, double gamma,
                                        double* re, double* im) {
  return guarded([&] {
    const auto v = akor::weak_singular_integral({mu_re, mu_im}, x, gamma);
    if (re) *re = v.real();
    if (im) *im = v.imag();
    return AKOR_OK;
  });
}

}  // extern "C"
