#include "fpcalc/stable_maps.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "closure_kit.hpp"
#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/solvers.hpp"
#include "fpcalc/subordination.hpp"

namespace fpcalc {

namespace {

void require_alpha(double alpha, const char* op) {
  if (!(alpha > 0 && alpha <= 1))
    throw ParameterError(std::string(op) + ": alpha must lie in (0, 1]");
}

void require_support(const Measure& mu, Support s, const char* op) {
  if (mu.support() != s)
    throw ParameterError(std::string(op) + ": " + mu.label() + " must live on the " +
                         to_string(s));
}

std::string tagged(const char* op, double alpha, const Measure& mu) {
  std::ostringstream os;
  os << op << "[" << alpha << "](" << mu.label() << ")";
  return os.str();
}

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

Measure m_alpha_plus(double alpha, const Measure& mu) {
  require_alpha(alpha, "M_alpha^+");
  require_support(mu, Support::PositiveHalfLine, "M_alpha^+");
  if (alpha == 1) return mu;
  const double inv = 1.0 / alpha;
  auto d = detail::closure_data(
      tagged("M+", alpha, mu), Support::PositiveHalfLine, Primary::Reciprocal,
      [mu, alpha, inv](cplx z) {
        return -principal_pow(-mu.reciprocal(-principal_pow(-z, alpha)), inv);
      },
      kInf, false);
  return Measure(std::move(d));
}

Measure m_alpha_minus(double alpha, const Measure& mu) {
  require_alpha(alpha, "M_alpha^-");
  require_support(mu, Support::NegativeHalfLine, "M_alpha^-");
  if (alpha == 1) return mu;
  const double inv = 1.0 / alpha;
  return detail::closure(
      tagged("M-", alpha, mu), Support::NegativeHalfLine, Primary::Reciprocal,
      [mu, alpha, inv](cplx z) { return principal_pow(mu.reciprocal(principal_pow(z, alpha)), inv); },
      kInf, false);
}

Measure u_alpha_plus(double alpha, const Measure& mu) {
  require_alpha(alpha, "U_alpha^+");
  require_support(mu, Support::PositiveHalfLine, "U_alpha^+");
  if (alpha == 1) return mu;
  const double inv = 1.0 / alpha;
  return detail::closure(
      tagged("U+", alpha, mu), Support::PositiveHalfLine, Primary::Eta,
      [mu, alpha, inv](cplx z) {
        return -principal_pow(-mu.eta(-principal_pow(-z, alpha)), inv);
      },
      kInf, false);
}

Measure m_alpha_plus_composite(double alpha, const Measure& mu, const ToleranceConfig& cfg) {
  require_alpha(alpha, "M_alpha^+ composite");
  if (alpha == 1) return mu;
  const Measure sub = mult_subordinate(laws::beta_alpha(alpha), mu, cfg);
  return mul_free(mul_free_power(sub, 1.0 / alpha, cfg), laws::monotone_stable_plus(alpha), cfg);
}

Measure u_alpha_plus_composite(double alpha, const Measure& mu, const ToleranceConfig& cfg) {
  require_alpha(alpha, "U_alpha^+ composite");
  if (alpha == 1) return mu;
  return mul_free_power(mult_subordinate(laws::boolean_stable_plus(alpha), mu, cfg), 1.0 / alpha,
                        cfg);
}

Measure markov_transform(const Measure& nu) {
  if (nu.support() == Support::UnitCircle)
    throw ParameterError("Markov transform: measure must live on R");
  if (nu.is_atomic()) {
    if (nu.is_point_mass()) return nu;
    const auto atoms = nu.atoms();
    auto d = detail::closure_data(
        "M(" + nu.label() + ")", nu.support(), Primary::Cauchy,
        [atoms](cplx z) {
          cplx acc{0.0, 0.0};
          for (const auto& a : atoms) acc -= a.weight * principal_log(z - a.location);
          return std::exp(acc);
        },
        nu.radius(), false);
    return Measure(std::move(d));
  }
  auto d = detail::closure_data(
      "M(" + nu.label() + ")", nu.support(), Primary::Cauchy,
      [nu](cplx z) {
        thread_local boost::math::quadrature::exp_sinh<double> integrator;
        auto integrand = [&](double u) {
          const cplx s = z + cplx{0.0, u};
          const cplx v = nu.cauchy(s) - 1.0 / s;
          // Far out on the ray the evaluator may underflow to NaN.
          if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            return u > 1e12 * (1.0 + std::abs(z)) ? cplx{0.0, 0.0} : v;
          return v;
        };
        // ds = i du along the ray.
        const double re = integrator.integrate([&](double u) { return integrand(u).real(); });
        const double im = integrator.integrate([&](double u) { return integrand(u).imag(); });
        const cplx ray = cplx{0.0, 1.0} * cplx{re, im};
        return std::exp(-principal_log(z) + ray);
      },
      nu.radius());
  return Measure(std::move(d));
}

Measure inverse_markov(const Measure& mu) {
  if (mu.support() == Support::UnitCircle)
    throw ParameterError("inverse Markov transform: measure must live on R");
  if (mu.is_point_mass() && mu.is_atomic()) return mu;
  auto d = detail::closure_data(
      "M^-1(" + mu.label() + ")", mu.support(), Primary::Cauchy,
      [mu](cplx z) {
        const cplx g = mu.cauchy(z);
        if (std::abs(g) * (1.0 + std::abs(z)) < 1e-10) throw DomainError("inverse Markov transform: G vanishes at z");
        double h = 1e-3 * (1.0 + std::abs(z));
        if (z.imag() != 0.0) h = std::min(h, 0.05 * std::abs(z.imag()));
        const cplx dg = derivative([&](cplx w) { return mu.cauchy(w); }, z, h);
        return -dg / g;
      },
      mu.radius());
  d.analytic_on_real_axis = mu.analytic_on_real_axis();
  return Measure(std::move(d));
}

Measure boolean_mixture(const Measure& nu, double alpha) {
  require_alpha(alpha, "Boolean mixture");
  require_support(nu, Support::PositiveHalfLine, "Boolean mixture");
  if (alpha == 1) return nu;
  if (const auto c = nu.point_location(); c && *c == 1.0) return laws::boolean_stable_plus(alpha);
  return detail::closure(
      tagged("mix", alpha, nu), Support::PositiveHalfLine, Primary::Cauchy,
      [nu, alpha](cplx z) {
        return principal_pow(-z, alpha - 1.0) * nu.cauchy(-principal_pow(-z, alpha));
      },
      kInf, false);
}

}  // namespace fpcalc
