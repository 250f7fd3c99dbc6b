#include "closure_kit.hpp"

#include <limits>

#include "fpcalc/errors.hpp"
#include "fpcalc/solvers.hpp"

namespace fpcalc::detail {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool below_axis(cplx u) { return u.imag() < -1e-10 * (1.0 + std::abs(u)); }

}  // namespace

std::function<cplx(cplx)> memoize(std::function<cplx(cplx)> fn) {
  auto memo = std::make_shared<Memo>();
  return [memo, fn = std::move(fn)](cplx z) { return memo->get_or(z, [&] { return fn(z); }); };
}

cplx solve_on_slit_plane(const ImplicitProblem& p, cplx z, const ToleranceConfig& cfg) {
  if (z.imag() < 0) return std::conj(solve_on_slit_plane(p, std::conj(z), cfg));
  auto real_solve = [&](double zr) {
    const cplx zc{zr, 0.0};
    const double u = solve_negative_axis([&](double t) {
      try {
        return p.residual(cplx{t, 0.0}, zc).real();
      } catch (const DomainError&) {
        return kNaN;
      }
    });
    return cplx{u, 0.0};
  };
  if (z.imag() == 0.0) {
    if (!(z.real() < 0)) throw DomainError("implicit eta: real query must be negative");
    return p.result(real_solve(z.real()), z);
  }
  const cplx za{-std::abs(z), 0.0};
  const cplx ua = real_solve(za.real());
  const PathResidual r = [&](cplx u, double s) {
    if (below_axis(u)) return cplx{kNaN, kNaN};
    return p.residual(u, za + s * (z - za));
  };
  return p.result(continue_root(r, ua, cfg), z);
}

cplx solve_from_above(const ImplicitProblem& p, cplx z, double height,
                      const ToleranceConfig& cfg) {
  if (z.imag() < 0) return std::conj(solve_from_above(p, std::conj(z), height, cfg));
  const cplx za = z + cplx{0.0, height};
  const PathResidual r = [&](cplx u, double s) {
    if (below_axis(u)) return cplx{kNaN, kNaN};
    return p.residual(u, za + s * (z - za));
  };
  return p.result(continue_root(r, za, cfg), z);
}

std::optional<double> point_mass(const Measure& mu) {
  if (mu.support() == Support::UnitCircle) return std::nullopt;
  return mu.point_location();
}

Measure::Data closure_data(std::string label, Support support, Primary primary,
                           std::function<cplx(cplx)> evaluator, double radius, bool memo) {
  Measure::Data d;
  d.kind = MeasureKind::Closure;
  d.label = std::move(label);
  d.support = support;
  d.primary = primary;
  d.evaluator = memo ? memoize(std::move(evaluator)) : std::move(evaluator);
  d.radius = radius;
  return d;
}

Measure closure(std::string label, Support support, Primary primary,
                std::function<cplx(cplx)> evaluator, double radius, bool memo) {
  return Measure(closure_data(std::move(label), support, primary, std::move(evaluator), radius, memo));
}

}  // namespace fpcalc::detail
