#include "fpcalc/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include <boost/math/tools/roots.hpp>

#include "fpcalc/errors.hpp"

namespace fpcalc {

namespace {

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

cplx stencil(const ComplexFn& f, cplx z, double h) {
  return (f(z - 2.0 * h) - 8.0 * f(z - h) + 8.0 * f(z + h) - f(z + 2.0 * h)) / (12.0 * h);
}

struct NewtonResult {
  cplx u;
  bool converged;
};

// Domain failures inside nested evaluators count as a failed step.
cplx guarded(const PathResidual& r, cplx u, double s) {
  try {
    return r(u, s);
  } catch (const DomainError&) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan};
  }
}

// Newton on u -> r(u, s) with a central-difference slope.
NewtonResult newton(const PathResidual& r_raw, cplx u, double s, const ToleranceConfig& cfg,
                    int max_iters) {
  auto r = [&](cplx v, double t) { return guarded(r_raw, v, t); };
  for (int it = 0; it < max_iters; ++it) {
    const cplx val = r(u, s);
    if (!finite(val)) return {u, false};
    const double h = 1e-7 * (1.0 + std::abs(u));
    const cplx slope = (r(u + h, s) - r(u - h, s)) / (2.0 * h);
    if (!finite(slope) || slope == cplx{0.0, 0.0}) return {u, false};
    const cplx step = val / slope;
    u -= step;
    if (!finite(u)) return {u, false};
    if (std::abs(step) <= cfg.newton_tol * (1.0 + std::abs(u))) {
      // One more evaluation confirms the residual did not blow up.
      return {u, finite(r(u, s))};
    }
  }
  return {u, false};
}

}  // namespace

cplx derivative(const ComplexFn& f, cplx z, double h) {
  if (h <= 0) h = 1e-3 * (1.0 + std::abs(z));
  const cplx coarse = stencil(f, z, h);
  const cplx fine = stencil(f, z, 0.5 * h);
  return fine + (fine - coarse) / 15.0;
}

cplx continue_root(const PathResidual& r, cplx seed, const ToleranceConfig& cfg,
                   const Admissible& admissible) {
  auto ok = [&](cplx u) { return !admissible || admissible(u); };

  NewtonResult start = newton(r, seed, 0.0, cfg, cfg.max_newton_iters);
  if (!start.converged || !ok(start.u))
    throw ConvergenceError("continuation: no root at the anchor");

  cplx u = start.u;
  cplx u_prev = u;
  double s = 0.0;
  double ds = 1.0 / 16.0;
  double ds_prev = 0.0;
  constexpr double kMinStep = 1.0 / (1 << 20);
  int attempts = 0;
  const int max_attempts = 20 * cfg.continuation_max_steps;

  while (s < 1.0) {
    if (++attempts > max_attempts)
      throw ConvergenceError("continuation: step budget exhausted at s=" + std::to_string(s));
    const double s_next = std::min(1.0, s + ds);
    const double taken = s_next - s;
    // Secant predictor from the previous accepted step.
    const cplx predicted = ds_prev > 0 ? u + (u - u_prev) * (taken / ds_prev) : u;
    NewtonResult step = newton(r, predicted, s_next, cfg, 12);
    const double jump = std::abs(step.u - predicted);
    const double allowed = std::max(4.0 * std::abs(predicted - u), 1e-2 * (1.0 + std::abs(u)));
    if (step.converged && ok(step.u) && (ds_prev == 0 || jump <= allowed)) {
      u_prev = u;
      u = step.u;
      ds_prev = taken;
      s = s_next;
      ds = std::min(2.0 * ds, 0.25);
    } else {
      ds *= 0.5;
      if (ds < kMinStep)
        throw ConvergenceError("continuation: stalled at s=" + std::to_string(s));
    }
  }
  NewtonResult polish = newton(r, u, 1.0, cfg, cfg.max_newton_iters);
  if (polish.converged && ok(polish.u)) u = polish.u;
  return u;
}

cplx invert_analytic(const ComplexFn& f, cplx target, cplx anchor, const ToleranceConfig& cfg,
                     const Admissible& admissible) {
  const cplx start = f(anchor);
  if (!finite(start)) throw DomainError("invert_analytic: evaluator undefined at the anchor");
  const PathResidual r = [&](cplx w, double s) { return f(w) - (start + s * (target - start)); };
  const cplx w = continue_root(r, anchor, cfg, admissible);
  const double residual = std::abs(f(w) - target);
  if (!(residual <= cfg.newton_tol * (1.0 + std::abs(target)) * 16.0))
    throw ConvergenceError("invert_analytic: residual " + std::to_string(residual) +
                           " above tolerance");
  return w;
}

double solve_bracketed(const RealFn& r, double lo, double hi, double rel_tol) {
  if (lo > hi) std::swap(lo, hi);
  const double flo = r(lo);
  const double fhi = r(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (!std::isfinite(flo) || !std::isfinite(fhi) || (flo > 0) == (fhi > 0))
    throw ConvergenceError("bracketing: no sign change on the interval");
  const int bits = std::max(10, static_cast<int>(-std::log2(rel_tol)));
  boost::math::tools::eps_tolerance<double> tol(std::min(bits, 52));
  std::uintmax_t iters = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(r, lo, hi, flo, fhi, tol, iters);
  return 0.5 * (a + b);
}

double solve_negative_axis(const RealFn& r, double rel_tol) {
  double x = -1.0;
  const double f1 = r(x);
  if (f1 == 0.0) return x;
  if (!std::isfinite(f1)) throw ConvergenceError("negative-axis solve: residual undefined at -1");
  const bool positive = f1 > 0;
  double near_prev = -1.0;
  double far_prev = -1.0;
  for (int k = 1; k <= 200; ++k) {
    const double near = -std::ldexp(1.0, -k);
    const double fn = r(near);
    if (std::isfinite(fn) && (fn > 0) != positive) return solve_bracketed(r, near, near_prev, rel_tol);
    near_prev = near;
    if (k <= 160) {
      const double far = -std::ldexp(1.0, k);
      const double ff = r(far);
      if (std::isfinite(ff) && (ff > 0) != positive) return solve_bracketed(r, far, far_prev, rel_tol);
      far_prev = far;
    }
  }
  throw ConvergenceError("negative-axis solve: no sign change found");
}

}  // namespace fpcalc
