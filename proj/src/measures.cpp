#include "fpcalc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "fpcalc/errors.hpp"
#include "fpcalc/solvers.hpp"

namespace fpcalc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Measure::Data named_data(std::string label, Support support, Primary primary,
                         std::function<cplx(cplx)> fn, double radius) {
  Measure::Data d;
  d.kind = MeasureKind::Named;
  d.label = std::move(label);
  d.support = support;
  d.primary = primary;
  d.evaluator = std::move(fn);
  d.radius = radius;
  return d;
}

std::string describe(std::string_view name, const LawParams& params) {
  std::ostringstream os;
  os << name;
  if (!params.empty()) {
    os << '(';
    bool first = true;
    for (const auto& [k, v] : params) {
      os << (first ? "" : ",") << k << '=' << v;
      first = false;
    }
    os << ')';
  }
  return os.str();
}

double param(const LawParams& params, const std::string& key, std::string_view law) {
  auto it = params.find(key);
  if (it == params.end())
    throw ParameterError(std::string(law) + ": missing parameter '" + key + "'");
  return it->second;
}

double param_or(const LawParams& params, const std::string& key, double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

void require(bool ok, std::string_view law, const std::string& what) {
  if (!ok) throw ParameterError(std::string(law) + ": parameter out of range, need " + what);
}

void require_alpha(double alpha, std::string_view law) {
  require(alpha > 0 && alpha <= 1, law, "alpha in (0,1]");
}

cplx cauchy_by_quadrature(const std::function<double(double)>& density, double a, double b,
                          cplx z) {
  thread_local boost::math::quadrature::tanh_sinh<double> integrator;
  auto re = [&](double x) { return (density(x) / (z - x)).real(); };
  auto im = [&](double x) { return (density(x) / (z - x)).imag(); };
  return {integrator.integrate(re, a, b), integrator.integrate(im, a, b)};
}

// Inverse of w -> w + (-w)^{1-alpha} on the branch with F(z) ~ z at infinity.
cplx free_stable_reciprocal(double alpha, cplx z) {
  const double e = 1.0 - alpha;
  if (z.imag() == 0.0) {
    if (z.real() >= 0.0)
      throw DomainError("free_stable_plus: F evaluated on the support");
    // F(z) = -x with x - x^{1-alpha} = -z, x > 1 on the increasing branch.
    const double c = -z.real();
    auto g = [&](double x) { return x - std::pow(x, e) - c; };
    double hi = std::max(2.0, 2.0 * c + 2.0);
    while (g(hi) < 0) hi *= 2.0;
    return {-solve_bracketed(g, 1.0, hi), 0.0};
  }
  const ComplexFn f = [e](cplx w) { return w + principal_pow(-w, e); };
  const cplx anchor{z.real(), z.imag() + 10.0 * (1.0 + std::abs(z))};
  return invert_analytic(f, z, anchor, default_tolerances(),
                         [](cplx w) { return w.imag() > 0; });
}

}  // namespace

Measure make_atomic(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ParameterError("atomic measure: no atoms");
  std::sort(atoms.begin(), atoms.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  std::vector<Atom> merged;
  double total = 0.0;
  for (const auto& a : atoms) {
    if (!std::isfinite(a.location) || !std::isfinite(a.weight))
      throw ParameterError("atomic measure: non-finite atom");
    if (!(a.weight > 0)) throw ParameterError("atomic measure: weights must be positive");
    total += a.weight;
    if (!merged.empty() && merged.back().location == a.location)
      merged.back().weight += a.weight;
    else
      merged.push_back(a);
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ParameterError("atomic measure: weights sum to " + std::to_string(total) + ", not 1");

  Measure::Data d;
  d.kind = MeasureKind::Atomic;
  const bool nonneg = merged.front().location >= 0;
  const bool nonpos = merged.back().location <= 0;
  d.support = nonneg ? Support::PositiveHalfLine
                     : (nonpos ? Support::NegativeHalfLine : Support::RealLine);
  std::ostringstream os;
  os << "atoms{";
  double radius = 0.0;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    os << (i ? "," : "") << '(' << merged[i].location << ',' << merged[i].weight << ')';
    radius = std::max(radius, std::abs(merged[i].location));
  }
  os << '}';
  d.label = os.str();
  d.radius = radius;
  d.point_mass = merged.size() == 1;
  d.primary = Primary::Cauchy;
  d.evaluator = [merged](cplx z) {
    cplx g{0.0, 0.0};
    for (const auto& a : merged) g += a.weight / (z - a.location);
    return g;
  };
  d.atoms = std::move(merged);
  return Measure(std::move(d));
}

Measure make_circle_atomic(std::vector<Atom> atoms) {
  if (atoms.empty()) throw ParameterError("circle measure: no atoms");
  double total = 0.0;
  for (auto& a : atoms) {
    if (!(a.weight > 0)) throw ParameterError("circle measure: weights must be positive");
    total += a.weight;
    a.location = std::fmod(a.location, 2.0 * kPi);
    if (a.location < 0) a.location += 2.0 * kPi;
  }
  if (std::abs(total - 1.0) > 1e-12)
    throw ParameterError("circle measure: weights sum to " + std::to_string(total) + ", not 1");
  Measure::Data d;
  d.kind = MeasureKind::Atomic;
  d.support = Support::UnitCircle;
  d.label = "circle-atoms";
  d.radius = 1.0;
  d.point_mass = atoms.size() == 1;
  d.primary = Primary::Cauchy;
  d.evaluator = [atoms](cplx z) {
    cplx g{0.0, 0.0};
    for (const auto& a : atoms) g += a.weight / (z - std::polar(1.0, a.location));
    return g;
  };
  d.atoms = std::move(atoms);
  return Measure(std::move(d));
}

Measure make_grid(GridDensity density) {
  density.require_unit_mass();
  auto grid = std::make_shared<const GridDensity>(std::move(density));
  Measure::Data d;
  d.kind = MeasureKind::Grid;
  const double lo = grid->xs().front();
  const double hi = grid->xs().back();
  d.support = lo >= 0 ? Support::PositiveHalfLine
                      : (hi <= 0 ? Support::NegativeHalfLine : Support::RealLine);
  d.label = "grid[" + std::to_string(grid->xs().size()) + "]";
  d.radius = std::max(std::abs(lo), std::abs(hi));
  d.primary = Primary::Cauchy;
  d.evaluator = [grid](cplx z) {
    const auto& xs = grid->xs();
    const auto& ps = grid->ps();
    cplx acc{0.0, 0.0};
    for (std::size_t i = 1; i < xs.size(); ++i) {
      acc += 0.5 * (ps[i - 1] / (z - xs[i - 1]) + ps[i] / (z - xs[i])) * (xs[i] - xs[i - 1]);
    }
    return acc;
  };
  d.grid = grid;
  return Measure(std::move(d));
}

namespace laws {

Measure delta(double a) { return make_atomic({{a, 1.0}}); }

Measure bernoulli_sigma(double t) {
  require(t >= 0, "bernoulli_sigma", "t >= 0");
  if (t == 0) return delta(1.0);
  return make_atomic({{0.0, t / (1.0 + t)}, {1.0 + t, 1.0 / (1.0 + t)}});
}

Measure bernoulli_rho(double t) {
  require(t >= 0 && t <= 1, "bernoulli_rho", "t in [0,1]");
  if (t == 0) return delta(0.0);
  if (t == 1) return delta(1.0);
  return make_atomic({{0.0, 1.0 - t}, {1.0, t}});
}

Measure boolean_stable_plus(double alpha) {
  require_alpha(alpha, "boolean_stable_plus");
  if (alpha == 1) return delta(1.0);
  auto d = named_data(describe("boolean_stable_plus", {{"alpha", alpha}}),
                      Support::PositiveHalfLine, Primary::Eta,
                      [alpha](cplx z) { return -principal_pow(-z, alpha); }, kInf);
  d.eta_at_neg_infinity = -kInf;
  return Measure(std::move(d));
}

Measure free_stable_plus(double alpha) {
  require_alpha(alpha, "free_stable_plus");
  if (alpha == 1) return delta(1.0);
  auto d = named_data(describe("free_stable_plus", {{"alpha", alpha}}), Support::PositiveHalfLine,
                      Primary::Reciprocal,
                      [alpha](cplx z) { return free_stable_reciprocal(alpha, z); }, kInf);
  d.eta_at_neg_infinity = -kInf;
  return Measure(std::move(d));
}

Measure monotone_stable_plus(double alpha) {
  require_alpha(alpha, "monotone_stable_plus");
  if (alpha == 1) return delta(1.0);
  auto d = named_data(describe("monotone_stable_plus", {{"alpha", alpha}}),
                      Support::PositiveHalfLine, Primary::Reciprocal,
                      [alpha](cplx z) {
                        return -principal_pow(principal_pow(-z, alpha) + 1.0, 1.0 / alpha);
                      },
                      kInf);
  d.eta_at_neg_infinity = -kInf;
  return Measure(std::move(d));
}

Measure free_poisson() {
  auto d = named_data("free_poisson", Support::PositiveHalfLine, Primary::Cauchy,
                      [](cplx z) { return 2.0 / (z * (1.0 + principal_sqrt(1.0 - 4.0 / z))); },
                      4.0);
  d.density = [](double x) {
    return (x > 0 && x < 4) ? std::sqrt((4.0 - x) / x) / (2.0 * kPi) : 0.0;
  };
  d.eta_at_neg_infinity = -kInf;
  return Measure(std::move(d));
}

Measure beta_alpha(double alpha) {
  require(alpha >= 0 && alpha <= 1, "beta_alpha", "alpha in [0,1]");
  if (alpha == 0) return delta(0.0);
  if (alpha == 1) return delta(1.0);
  auto d = named_data(describe("beta_alpha", {{"alpha", alpha}}), Support::PositiveHalfLine,
                      Primary::Eta,
                      [alpha](cplx z) { return 1.0 - principal_pow(1.0 - z, alpha); }, 1.0);
  const double c = std::sin(kPi * alpha) / kPi;
  d.density = [alpha, c](double x) {
    return (x > 0 && x < 1) ? c * std::pow(x, alpha - 1) * std::pow(1 - x, -alpha) : 0.0;
  };
  d.eta_at_neg_infinity = -kInf;
  return Measure(std::move(d));
}

Measure beta(double p, double q) {
  require(p > 0 && q > 0, "beta", "p, q > 0");
  if (std::abs(p + q - 1.0) < 1e-15) return beta_alpha(p);
  const double norm = std::beta(p, q);
  auto density = [p, q, norm](double x) {
    return (x > 0 && x < 1) ? std::pow(x, p - 1) * std::pow(1 - x, q - 1) / norm : 0.0;
  };
  std::function<cplx(cplx)> g;
  if (std::abs(p + q - 2.0) < 1e-15) {
    // beta(1-s, 1+s): G(z) = (1 - (1 - 1/z)^s) / s, and -log(1 - 1/z) at s = 0.
    const double s = q - 1.0;
    if (s == 0.0)
      g = [](cplx z) { return -principal_log(1.0 - 1.0 / z); };
    else
      g = [s](cplx z) { return (1.0 - principal_pow(1.0 - 1.0 / z, s)) / s; };
  } else {
    g = [density](cplx z) { return cauchy_by_quadrature(density, 0.0, 1.0, z); };
  }
  auto d = named_data(describe("beta", {{"p", p}, {"q", q}}), Support::PositiveHalfLine,
                      Primary::Cauchy, std::move(g), 1.0);
  d.density = density;
  return Measure(std::move(d));
}

Measure cauchy(double a, double b) {
  require(b >= 0, "cauchy", "b >= 0");
  if (b == 0) return delta(a);
  auto d = named_data(describe("cauchy", {{"a", a}, {"b", b}}), Support::RealLine,
                      Primary::Reciprocal, [a, b](cplx z) { return z - a + cplx{0.0, b}; }, kInf);
  d.density = [a, b](double x) { return b / (kPi * ((x - a) * (x - a) + b * b)); };
  d.analytic_on_real_axis = true;
  return Measure(std::move(d));
}

Measure arcsine(double variance) {
  require(variance >= 0, "arcsine", "t >= 0");
  if (variance == 0) return delta(0.0);
  const double two_t = 2.0 * variance;
  auto d = named_data(describe("arcsine", {{"t", variance}}), Support::RealLine,
                      Primary::Reciprocal,
                      [two_t](cplx z) { return z * principal_sqrt(1.0 - two_t / (z * z)); },
                      std::sqrt(two_t));
  d.density = [two_t](double x) {
    return x * x < two_t ? 1.0 / (kPi * std::sqrt(two_t - x * x)) : 0.0;
  };
  return Measure(std::move(d));
}

Measure semicircle(double variance) {
  require(variance > 0, "semicircle", "t > 0");
  const double four_t = 4.0 * variance;
  auto d = named_data(describe("semicircle", {{"t", variance}}), Support::RealLine,
                      Primary::Cauchy,
                      [four_t](cplx z) {
                        return 2.0 / (z * (1.0 + principal_sqrt(1.0 - four_t / (z * z))));
                      },
                      std::sqrt(four_t));
  d.density = [four_t, variance](double x) {
    return x * x < four_t ? std::sqrt(four_t - x * x) / (2.0 * kPi * variance) : 0.0;
  };
  return Measure(std::move(d));
}

namespace {

// log(1 + w) and exp(w) - 1 without cancellation for small |w|.
cplx log1p_c(cplx w) {
  if (std::abs(w) > 1e-3) return principal_log(1.0 + w);
  cplx sum{0.0, 0.0}, term = w;
  for (int k = 1; k <= 8; ++k, term *= -w) sum += term / double(k);
  return sum;
}

cplx expm1_c(cplx w) {
  if (std::abs(w) > 1e-3) return std::exp(w) - 1.0;
  cplx sum{0.0, 0.0}, term = w;
  for (int k = 1; k <= 8; ++k) {
    sum += term;
    term *= w / double(k + 1);
  }
  return sum;
}

}  // namespace

Measure mu_alpha_p(double alpha, double p) {
  require(alpha > 0 && alpha <= 1 && p > 0 && p <= 1, "mu_alpha_p", "alpha, p in (0,1]");
  auto d = named_data(describe("mu_alpha_p", {{"alpha", alpha}, {"p", p}}),
                      Support::PositiveHalfLine, Primary::Cauchy,
                      [alpha, p](cplx z) {
                        const cplx w = principal_pow(-1.0 / z, alpha);
                        return -principal_pow(expm1_c(p * log1p_c(w)) / p, 1.0 / alpha);
                      },
                      kInf);
  return Measure(std::move(d));
}

namespace {

double nu_p_kernel(double p, double x) {
  if (!(x > 0 && x < 1)) return 0.0;
  const double xp = std::pow(x, p);
  const double yp = std::pow(1 - x, p);
  return std::pow(x, p - 1) * std::pow(1 - x, p - 1) /
         (xp * xp - 2.0 * xp * yp * std::cos(kPi * p) + yp * yp);
}

// (z/(z-1))^p - 1 is evaluated as expm1(-p log(1 - 1/z)) to survive |z| >> 1.
cplx nu_p_cauchy(double p, cplx z) {
  return (p / z) / ((z - 1.0) * expm1_c(-p * log1p_c(-1.0 / z)));
}

}  // namespace

Measure nu_p(double p) {
  require(p > 0 && p <= 1, "nu_p", "p in (0,1]");
  if (p == 1) return delta(0.0);
  auto d = named_data(describe("nu_p", {{"p", p}}), Support::PositiveHalfLine, Primary::Cauchy,
                      [p](cplx z) { return nu_p_cauchy(p, z); }, 1.0);
  // Absolutely continuous part only; the atom p at 0 is not a density.
  d.density = [p](double x) { return p * std::sin(kPi * p) / kPi * nu_p_kernel(p, x); };
  d.eta_at_neg_infinity = p - 1.0;
  return Measure(std::move(d));
}

Measure tau_p(double p) {
  require(p > 0 && p < 1, "tau_p", "p in (0,1)");
  auto d = named_data(describe("tau_p", {{"p", p}}), Support::PositiveHalfLine, Primary::Cauchy,
                      [p](cplx z) { return (nu_p_cauchy(p, z) - p / z) / (1.0 - p); }, 1.0);
  d.density = [p](double x) {
    return p * std::sin(kPi * p) / ((1.0 - p) * kPi) * nu_p_kernel(p, x);
  };
  return Measure(std::move(d));
}

Measure circle_cauchy(double a, double b) {
  require(a >= 0, "circle_cauchy", "a >= 0");
  const cplx c = std::exp(cplx{-a, b});
  auto d = named_data(describe("circle_cauchy", {{"a", a}, {"b", b}}), Support::UnitCircle,
                      Primary::Eta, [c](cplx z) { return c * z; }, 1.0);
  d.density = [a, b](double theta) {
    const double e = std::exp(-a);
    return (1.0 - e * e) / (2.0 * kPi * (1.0 + e * e - 2.0 * e * std::cos(theta - b)));
  };
  d.point_mass = a == 0;
  return Measure(std::move(d));
}

}  // namespace laws

Measure make_named(std::string_view kind, const LawParams& params) {
  const auto alpha = [&] { return param(params, "alpha", kind); };
  if (kind == "delta") return laws::delta(param(params, "a", kind));
  if (kind == "bernoulli_sigma") return laws::bernoulli_sigma(param(params, "t", kind));
  if (kind == "bernoulli_rho") return laws::bernoulli_rho(param(params, "t", kind));
  if (kind == "boolean_stable_plus") return laws::boolean_stable_plus(alpha());
  if (kind == "boolean_stable_minus") return dilate(-1.0, laws::boolean_stable_plus(alpha()));
  if (kind == "free_stable_plus") return laws::free_stable_plus(alpha());
  if (kind == "free_stable_minus") return dilate(-1.0, laws::free_stable_plus(alpha()));
  if (kind == "monotone_stable_plus") return laws::monotone_stable_plus(alpha());
  if (kind == "monotone_stable_minus") return dilate(-1.0, laws::monotone_stable_plus(alpha()));
  if (kind == "free_poisson") return laws::free_poisson();
  if (kind == "beta") return laws::beta(param(params, "p", kind), param(params, "q", kind));
  if (kind == "beta_alpha") return laws::beta_alpha(alpha());
  if (kind == "cauchy") return laws::cauchy(param_or(params, "a", 0.0), param(params, "b", kind));
  if (kind == "arcsine") return laws::arcsine(param(params, "t", kind));
  if (kind == "semicircle") return laws::semicircle(param_or(params, "t", 1.0));
  if (kind == "mu_alpha_p") return laws::mu_alpha_p(alpha(), param(params, "p", kind));
  if (kind == "nu_p") return laws::nu_p(param(params, "p", kind));
  if (kind == "tau_p") return laws::tau_p(param(params, "p", kind));
  if (kind == "circle_cauchy")
    return laws::circle_cauchy(param(params, "a", kind), param_or(params, "b", 0.0));
  throw ParameterError("unknown law '" + std::string(kind) + "'");
}

Measure dilate(double a, const Measure& mu) {
  if (a == 0) throw ParameterError("dilate: a = 0");
  if (mu.support() == Support::UnitCircle) throw ParameterError("dilate: not defined on the circle");
  if (a == 1) return mu;
  if (mu.is_atomic()) {
    std::vector<Atom> atoms = mu.atoms();
    for (auto& x : atoms) x.location *= a;
    return make_atomic(std::move(atoms));
  }
  Measure::Data d;
  d.kind = mu.kind() == MeasureKind::Grid ? MeasureKind::Grid : MeasureKind::Closure;
  d.label = "dilate(" + std::to_string(a) + "," + mu.label() + ")";
  switch (mu.support()) {
    case Support::PositiveHalfLine:
      d.support = a > 0 ? Support::PositiveHalfLine : Support::NegativeHalfLine;
      break;
    case Support::NegativeHalfLine:
      d.support = a > 0 ? Support::NegativeHalfLine : Support::PositiveHalfLine;
      break;
    default: d.support = Support::RealLine;
  }
  d.radius = mu.radius() * std::abs(a);
  d.analytic_on_real_axis = mu.analytic_on_real_axis();
  d.point_mass = mu.is_point_mass();
  if (a > 0) d.eta_at_neg_infinity = mu.data().eta_at_neg_infinity;
  if (mu.density()) {
    auto dens = mu.density();
    d.density = [dens, a](double x) { return dens(x / a) / std::abs(a); };
  }
  if (mu.grid()) {
    std::vector<double> xs = mu.grid()->xs();
    std::vector<double> ps = mu.grid()->ps();
    for (auto& x : xs) x *= a;
    for (auto& p : ps) p /= std::abs(a);
    if (a < 0) {
      std::reverse(xs.begin(), xs.end());
      std::reverse(ps.begin(), ps.end());
    }
    d.grid = std::make_shared<const GridDensity>(std::move(xs), std::move(ps),
                                                 mu.grid()->mass_tol());
  }
  switch (mu.data().primary) {
    case Primary::Eta:
      d.primary = Primary::Eta;
      d.evaluator = [mu, a](cplx z) { return mu.eta(a * z); };
      break;
    case Primary::Cauchy:
      d.primary = Primary::Cauchy;
      d.evaluator = [mu, a](cplx z) { return mu.cauchy(z / a) / a; };
      break;
    case Primary::Reciprocal:
      d.primary = Primary::Reciprocal;
      d.evaluator = [mu, a](cplx z) { return a * mu.reciprocal(z / a); };
      break;
  }
  return Measure(std::move(d));
}

Measure power_pushforward(double p, const Measure& mu) {
  if (!(p > 0)) throw ParameterError("power_pushforward: p must be positive");
  if (mu.support() != Support::PositiveHalfLine)
    throw ParameterError("power_pushforward: measure must live on the positive half-line");
  if (p == 1) return mu;
  if (mu.is_atomic()) {
    std::vector<Atom> atoms = mu.atoms();
    for (auto& x : atoms) x.location = std::pow(x.location, p);
    return make_atomic(std::move(atoms));
  }
  if (const GridDensity* g = mu.grid()) {
    std::vector<double> ys;
    std::vector<double> qs;
    for (std::size_t i = 0; i < g->xs().size(); ++i) {
      const double x = g->xs()[i];
      if (x <= 0) continue;
      ys.push_back(std::pow(x, p));
      qs.push_back(g->ps()[i] / (p * std::pow(x, p - 1)));
    }
    return make_grid(GridDensity(std::move(ys), std::move(qs), g->mass_tol()));
  }
  throw ParameterError("power_pushforward: only atomic or grid measures are supported");
}

std::vector<double> moments(const Measure& mu, int n) {
  if (n < 1) throw ParameterError("moments: n must be >= 1");
  if (mu.support() == Support::UnitCircle)
    throw ParameterError("moments: circle measures have complex moments");
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  if (mu.is_atomic()) {
    for (const auto& a : mu.atoms()) {
      double xk = 1.0;
      for (int k = 0; k < n; ++k) {
        xk *= a.location;
        out[static_cast<std::size_t>(k)] += a.weight * xk;
      }
    }
    return out;
  }
  if (const GridDensity* g = mu.grid()) {
    for (int k = 1; k <= n; ++k) out[static_cast<std::size_t>(k - 1)] = g->moment(k);
    return out;
  }
  throw DomainError("moments: closure measures must be densified first");
}

}  // namespace fpcalc
