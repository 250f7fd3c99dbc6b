#pragma once

#include <functional>

#include "fpcalc/branch.hpp"
#include "fpcalc/config.hpp"

namespace fpcalc {

using ComplexFn = std::function<cplx(cplx)>;
using RealFn = std::function<double(double)>;
/// Residual r(u, s) of a root-tracking problem parametrised by s in [0, 1].
using PathResidual = std::function<cplx(cplx u, double s)>;
using Admissible = std::function<bool(cplx)>;

/// Complex derivative of a holomorphic f by a Richardson-extrapolated
/// five-point stencil. `h` <= 0 selects 1e-3 * (1 + |z|).
cplx derivative(const ComplexFn& f, cplx z, double h = 0.0);

/// Tracks the root u(s) of r(u, s) = 0 from s = 0 to s = 1.
///
/// `seed` must be close to the root at s = 0. Steps shrink on Newton failure
/// or when `admissible` rejects an iterate, and the walk gives up with
/// ConvergenceError once the step drops below 2^-20 of the path.
cplx continue_root(const PathResidual& r, cplx seed, const ToleranceConfig& cfg,
                   const Admissible& admissible = {});

/// Solves f(w) = target by walking the straight segment from f(anchor) to
/// target and tracking the preimage from `anchor`.
/// Post: |f(w) - target| <= newton_tol * (1 + |target|).
cplx invert_analytic(const ComplexFn& f, cplx target, cplx anchor,
                     const ToleranceConfig& cfg, const Admissible& admissible = {});

/// Root of a real function on (-inf, 0) whose sign near 0- differs from
/// its sign far to the left. Brackets by doubling/halving from -1, then
/// refines with TOMS 748.
double solve_negative_axis(const RealFn& r, double rel_tol = 1e-15);

/// TOMS 748 on a sign-changing bracket [lo, hi].
double solve_bracketed(const RealFn& r, double lo, double hi, double rel_tol = 1e-15);

}  // namespace fpcalc
