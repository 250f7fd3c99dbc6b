#include "fpcalc/convolutions.hpp"

#include <cmath>
#include <algorithm>
#include <limits>
#include <optional>

#include "closure_kit.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/transforms.hpp"

namespace fpcalc {

namespace {

using detail::point_mass;

bool on_circle(const Measure& m) { return m.support() == Support::UnitCircle; }

// eta(-infinity) = mu({0}) - 1 when it is known without evaluation.
std::optional<double> exact_eta_limit(const Measure& mu) {
  if (mu.support() != Support::PositiveHalfLine) return std::nullopt;
  if (mu.data().eta_at_neg_infinity) return mu.data().eta_at_neg_infinity;
  if (mu.is_atomic()) return mu.eta_limit();
  return std::nullopt;
}

void require_line(const Measure& mu, const Measure& nu, const char* op) {
  if (on_circle(mu) || on_circle(nu))
    throw ParameterError(std::string(op) + ": measures must live on R");
}

void require_positive(const Measure& m, const char* op) {
  if (m.support() != Support::PositiveHalfLine)
    throw ParameterError(std::string(op) + ": " + m.label() + " is not on the positive half-line");
  if (m.is_delta_zero()) throw ParameterError(std::string(op) + ": delta_0 is excluded");
}

Support additive_support(const Measure& mu, const Measure& nu) {
  if (mu.support() == nu.support() && mu.support() != Support::RealLine) return mu.support();
  return Support::RealLine;
}

std::string binary_label(const Measure& mu, const char* op, const Measure& nu) {
  return "(" + mu.label() + " " + op + " " + nu.label() + ")";
}

double additive_height(const Measure& mu, const Measure& nu, cplx z, const ToleranceConfig& cfg) {
  if (cfg.cone_height > 0) return cfg.cone_height;
  const double r = mu.radius() + nu.radius();
  return 10.0 * (1.0 + (std::isfinite(r) ? r : std::abs(z)));
}

Measure translate(const Measure& mu, double a) {
  if (a == 0) return mu;
  if (mu.is_atomic()) {
    auto atoms = mu.atoms();
    for (auto& x : atoms) x.location += a;
    return make_atomic(std::move(atoms));
  }
  auto d = detail::closure_data("(" + mu.label() + " + " + std::to_string(a) + ")",
                                Support::RealLine, Primary::Reciprocal,
                                [mu, a](cplx z) { return mu.reciprocal(z - a); },
                                std::abs(a) + mu.radius(), false);
  if (a > 0 && mu.support() == Support::PositiveHalfLine) d.support = Support::PositiveHalfLine;
  if (a < 0 && mu.support() == Support::NegativeHalfLine) d.support = Support::NegativeHalfLine;
  d.analytic_on_real_axis = mu.analytic_on_real_axis();
  if (mu.density()) {
    auto dens = mu.density();
    d.density = [dens, a](double x) { return dens(x - a); };
  }
  return Measure(std::move(d));
}

void check_residual(cplx residual, cplx scale, const char* op) {
  if (!(std::abs(residual) <= 1e-8 * (1.0 + std::abs(scale))))
    throw DomainError(std::string(op) + ": roundtrip residual " +
                      std::to_string(std::abs(residual)) + " too large");
}

}  // namespace

Measure add_monotone(const Measure& mu, const Measure& nu) {
  require_line(mu, nu, "monotone convolution");
  // mu |> delta_b is the translate of mu; delta_a |> nu is not a translate.
  if (const auto b = point_mass(nu)) return translate(mu, *b);
  auto d = detail::closure_data(binary_label(mu, "|>", nu), additive_support(mu, nu),
                                Primary::Reciprocal,
                                [mu, nu](cplx z) { return mu.reciprocal(nu.reciprocal(z)); },
                                mu.radius() + nu.radius(), false);
  d.analytic_on_real_axis = mu.analytic_on_real_axis() && nu.analytic_on_real_axis();
  return Measure(std::move(d));
}

Measure add_boolean(const Measure& mu, const Measure& nu) {
  if (on_circle(mu) && on_circle(nu)) {
    return detail::closure(binary_label(mu, "(+)", nu), Support::UnitCircle, Primary::Eta,
                           [mu, nu](cplx z) { return mu.eta(z) + nu.eta(z); }, 1.0, false);
  }
  require_line(mu, nu, "Boolean convolution");
  const auto a = point_mass(mu);
  const auto b = point_mass(nu);
  if (a && b) return laws::delta(*a + *b);
  auto d = detail::closure_data(
      binary_label(mu, "(+)", nu), additive_support(mu, nu), Primary::Reciprocal,
      [mu, nu](cplx z) { return mu.reciprocal(z) + nu.reciprocal(z) - z; },
      mu.radius() + nu.radius(), false);
  d.analytic_on_real_axis = mu.analytic_on_real_axis() && nu.analytic_on_real_axis();
  return Measure(std::move(d));
}

Measure boolean_power(const Measure& mu, double s) {
  if (!(s >= 0)) throw ParameterError("Boolean power: s must be >= 0");
  if (s == 1) return mu;
  const std::string label = mu.label() + "^(+)" + std::to_string(s);
  if (on_circle(mu))
    return detail::closure(label, Support::UnitCircle, Primary::Eta,
                           [mu, s](cplx z) { return s * mu.eta(z); }, 1.0, false);
  if (s == 0) return laws::delta(0.0);
  if (const auto a = point_mass(mu)) return laws::delta(s * *a);
  auto d = detail::closure_data(label, mu.support(), Primary::Reciprocal,
                                [mu, s](cplx z) { return (1.0 - s) * z + s * mu.reciprocal(z); },
                                std::numeric_limits<double>::infinity(), false);
  d.analytic_on_real_axis = mu.analytic_on_real_axis();
  if (const auto l = exact_eta_limit(mu)) d.eta_at_neg_infinity = s * *l;
  return Measure(std::move(d));
}

Measure add_free(const Measure& mu, const Measure& nu, const ToleranceConfig& cfg) {
  require_line(mu, nu, "free convolution");
  if (const auto b = point_mass(nu)) return translate(mu, *b);
  if (const auto a = point_mass(mu)) return translate(nu, *a);
  detail::ImplicitProblem p;
  p.residual = [mu, nu](cplx u, cplx z) {
    const cplx fu = mu.reciprocal(u);
    return nu.reciprocal(z - u + fu) - fu;
  };
  p.result = [mu, nu](cplx u, cplx z) {
    const cplx fu = mu.reciprocal(u);
    check_residual(nu.reciprocal(z - u + fu) - fu, fu, "free convolution");
    return fu;
  };
  auto eval = [mu, nu, p, cfg](cplx z) {
    return detail::solve_from_above(p, z, additive_height(mu, nu, z, cfg), cfg);
  };
  return detail::closure(binary_label(mu, "[+]", nu), additive_support(mu, nu),
                         Primary::Reciprocal, eval, mu.radius() + nu.radius());
}

Measure free_power(const Measure& mu, double t, const ToleranceConfig& cfg) {
  if (!(t >= 1)) throw ParameterError("free power: t must be >= 1");
  if (on_circle(mu)) throw ParameterError("free power: measure must live on R");
  if (t == 1) return mu;
  if (const auto a = point_mass(mu)) return laws::delta(t * *a);
  detail::ImplicitProblem p;
  p.residual = [mu, t](cplx u, cplx z) { return t * u - (t - 1.0) * mu.reciprocal(u) - z; };
  p.result = [mu, t](cplx u, cplx z) {
    const cplx fu = mu.reciprocal(u);
    check_residual(t * u - (t - 1.0) * fu - z, z, "free power");
    return fu;
  };
  auto eval = [mu, t, p, cfg](cplx z) {
    return detail::solve_from_above(p, z, additive_height(mu, mu, z, cfg) * t, cfg);
  };
  auto d = detail::closure_data(mu.label() + "^[+]" + std::to_string(t), mu.support(),
                                Primary::Reciprocal, eval, t * mu.radius());
  // The atom at 0 shrinks to max(0, t m - (t - 1)).
  if (const auto l = exact_eta_limit(mu)) d.eta_at_neg_infinity = std::max(-1.0, t * *l);
  return Measure(std::move(d));
}

Measure mul_monotone(const Measure& mu, const Measure& nu) {
  if (on_circle(mu) || on_circle(nu)) {
    if (!(on_circle(mu) && on_circle(nu)))
      throw ParameterError("multiplicative monotone convolution: mixed circle and line measures");
    return detail::closure(binary_label(mu, "o>", nu), Support::UnitCircle, Primary::Eta,
                           [mu, nu](cplx z) { return mu.eta(nu.eta(z)); }, 1.0, false);
  }
  if (mu.support() != Support::PositiveHalfLine)
    throw ParameterError("multiplicative monotone convolution: left factor must live on R+");
  const auto a = point_mass(mu);
  const auto b = point_mass(nu);
  if (a && b) return laws::delta(*a * *b);
  if (b) return dilate(*b, mu);
  const Support s = nu.support() == Support::PositiveHalfLine ? Support::PositiveHalfLine
                                                              : Support::RealLine;
  auto d = detail::closure_data(binary_label(mu, "o>", nu), s, Primary::Eta,
                                [mu, nu](cplx z) { return mu.eta(nu.eta(z)); },
                                mu.radius() * nu.radius(), false);
  return Measure(std::move(d));
}

Measure mul_free(const Measure& mu, const Measure& nu, const ToleranceConfig& cfg) {
  require_positive(mu, "free multiplicative convolution");
  require_positive(nu, "free multiplicative convolution");
  if (const auto a = point_mass(mu)) return dilate(*a, nu);
  if (const auto b = point_mass(nu)) return dilate(*b, mu);
  const double lower = std::max(mu.eta_limit(), nu.eta_limit());
  if (!(lower < 0))
    throw DomainError("free multiplicative convolution: empty Sigma domain (" +
                      std::to_string(lower) + ", 0)");
  detail::ImplicitProblem p;
  p.residual = [mu, nu](cplx u, cplx z) {
    const cplx w = mu.eta(u);
    return nu.eta(z * w / u) - w;
  };
  p.result = [mu](cplx u, cplx) { return mu.eta(u); };
  auto d = detail::closure_data(
      binary_label(mu, "[x]", nu), Support::PositiveHalfLine, Primary::Eta,
      [p, cfg](cplx z) { return detail::solve_on_slit_plane(p, z, cfg); },
      mu.radius() * nu.radius());
  d.eta_at_neg_infinity = lower;
  return Measure(std::move(d));
}

Measure mul_free_power(const Measure& mu, double t, const ToleranceConfig& cfg) {
  if (!(t >= 1)) throw ParameterError("free multiplicative power: t must be >= 1");
  require_positive(mu, "free multiplicative power");
  if (t == 1) return mu;
  if (const auto a = point_mass(mu)) return laws::delta(std::pow(*a, t));
  detail::ImplicitProblem p;
  p.residual = [mu, t](cplx u, cplx z) {
    const cplx w = mu.eta(u);
    return w * principal_pow(u / w, t) - z;
  };
  p.result = [mu](cplx u, cplx) { return mu.eta(u); };
  auto d = detail::closure_data(
      mu.label() + "^[x]" + std::to_string(t), Support::PositiveHalfLine, Primary::Eta,
      [p, cfg](cplx z) { return detail::solve_on_slit_plane(p, z, cfg); },
      std::pow(mu.radius(), t));
  d.eta_at_neg_infinity = mu.eta_limit();
  return Measure(std::move(d));
}

ConvolutionKind parse_convolution_kind(std::string_view name) {
  if (name == "add-free") return ConvolutionKind::AddFree;
  if (name == "add-boolean") return ConvolutionKind::AddBoolean;
  if (name == "add-monotone") return ConvolutionKind::AddMonotone;
  if (name == "mul-free") return ConvolutionKind::MulFree;
  if (name == "mul-monotone") return ConvolutionKind::MulMonotone;
  throw ParameterError("unknown convolution kind '" + std::string(name) + "'");
}

const char* to_string(ConvolutionKind kind) {
  switch (kind) {
    case ConvolutionKind::AddFree: return "add-free";
    case ConvolutionKind::AddBoolean: return "add-boolean";
    case ConvolutionKind::AddMonotone: return "add-monotone";
    case ConvolutionKind::MulFree: return "mul-free";
    case ConvolutionKind::MulMonotone: return "mul-monotone";
  }
  return "?";
}

Measure convolve(ConvolutionKind kind, const Measure& mu, const Measure& nu,
                 const ToleranceConfig& cfg) {
  switch (kind) {
    case ConvolutionKind::AddFree: return add_free(mu, nu, cfg);
    case ConvolutionKind::AddBoolean: return add_boolean(mu, nu);
    case ConvolutionKind::AddMonotone: return add_monotone(mu, nu);
    case ConvolutionKind::MulFree: return mul_free(mu, nu, cfg);
    case ConvolutionKind::MulMonotone: return mul_monotone(mu, nu);
  }
  throw ParameterError("unknown convolution kind");
}

}  // namespace fpcalc
