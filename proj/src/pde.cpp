#include "fpcalc/pde.hpp"

#include <cmath>

#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/subordination.hpp"

namespace fpcalc {

FamilySpec parse_family(std::string_view name, double a, double b) {
  FamilySpec f{Family::BernoulliSigma, a, b};
  if (name == "bernoulli-sigma") f.kind = Family::BernoulliSigma;
  else if (name == "boolean-dilation") f.kind = Family::BooleanDilation;
  else if (name == "bernoulli-rho") f.kind = Family::BernoulliRho;
  else if (name == "boolean-stable") f.kind = Family::BooleanStable;
  else if (name == "beta") f.kind = Family::Beta;
  else if (name == "constant") f.kind = Family::ConstantMult;
  else if (name == "arcsine-additive") f.kind = Family::ArcsineAdditive;
  else if (name == "cauchy-additive") f.kind = Family::CauchyAdditive;
  else throw ParameterError("unknown semigroup family '" + std::string(name) + "'");
  if (f.kind == Family::CauchyAdditive && !(b >= 0))
    throw ParameterError("cauchy-additive: b must be >= 0");
  return f;
}

const char* to_string(Family f) {
  switch (f) {
    case Family::BernoulliSigma: return "bernoulli-sigma";
    case Family::BooleanDilation: return "boolean-dilation";
    case Family::BernoulliRho: return "bernoulli-rho";
    case Family::BooleanStable: return "boolean-stable";
    case Family::Beta: return "beta";
    case Family::ConstantMult: return "constant";
    case Family::ArcsineAdditive: return "arcsine-additive";
    case Family::CauchyAdditive: return "cauchy-additive";
  }
  return "?";
}

bool is_additive(Family f) {
  return f == Family::ArcsineAdditive || f == Family::CauchyAdditive;
}

std::vector<Family> multiplicative_families() {
  return {Family::BernoulliSigma, Family::BooleanDilation, Family::BernoulliRho,
          Family::BooleanStable, Family::Beta};
}

Measure family_member(const FamilySpec& fam, double t) {
  if (!(t >= 0)) throw ParameterError("semigroup parameter t must be >= 0");
  const double s = std::exp(-t);
  switch (fam.kind) {
    case Family::BernoulliSigma: return laws::bernoulli_sigma(t);
    case Family::BooleanDilation: return laws::delta(s);
    case Family::BernoulliRho: return laws::bernoulli_rho(s);
    case Family::BooleanStable: return laws::boolean_stable_plus(s);
    case Family::Beta: return laws::beta_alpha(s);
    case Family::ConstantMult: return laws::delta(1.0);
    case Family::ArcsineAdditive: return laws::arcsine(t);
    case Family::CauchyAdditive: return laws::cauchy(fam.a * t, fam.b * t);
  }
  throw ParameterError("unknown semigroup family");
}

cplx generator(const FamilySpec& fam, cplx z) {
  switch (fam.kind) {
    case Family::BernoulliSigma: return z;
    case Family::BooleanDilation: return -1.0;
    case Family::BernoulliRho: return z - 1.0;
    case Family::BooleanStable: return -principal_log(-z);
    case Family::Beta: return (1.0 - z) * principal_log(1.0 - z) / z;
    case Family::ConstantMult: return 0.0;
    case Family::ArcsineAdditive: return -1.0 / z;
    case Family::CauchyAdditive: return cplx{-fam.a, fam.b};
  }
  throw ParameterError("unknown semigroup family");
}

cplx generator_fd(const FamilySpec& fam, cplx z, double h) {
  const Measure nu = family_member(fam, h);
  if (is_additive(fam.kind)) return (nu.reciprocal(z) - z) / h;
  return (nu.eta(z) / z - 1.0) / h;
}

cplx pde_residual_mult(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                       const ToleranceConfig& cfg) {
  if (is_additive(fam.kind)) throw ParameterError("multiplicative residual: additive family");
  if (!(h > 0) || !(t - h > 0)) throw ParameterError("PDE residual: need 0 < h < t");
  auto H = [&](double tt, cplx zz) {
    return zz - mult_subordinate(family_member(fam, tt), mu, cfg).reciprocal(zz);
  };
  const cplx ht = (H(t + h, z) - H(t - h, z)) / (2.0 * h);
  const cplx hz = (H(t, z + h) - H(t, z - h)) / (2.0 * h);
  const cplx centre = H(t, z);
  return ht + z * generator(fam, centre / z) * hz;
}

cplx pde_residual_add(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                      const ToleranceConfig& cfg) {
  if (!is_additive(fam.kind)) throw ParameterError("additive residual: multiplicative family");
  if (!(h > 0) || !(t - h > 0)) throw ParameterError("PDE residual: need 0 < h < t");
  auto A = [&](double tt) {
    if (fam.kind == Family::CauchyAdditive) return cauchy_subordinate(fam.a * tt, fam.b * tt, mu);
    return add_subordinate(family_member(fam, tt), mu, cfg);
  };
  const Measure centre_measure = A(t);
  auto G = [](const Measure& m, cplx zz) { return zz - m.reciprocal(zz); };
  const cplx centre = G(centre_measure, z);
  const cplx j = generator(fam, z - centre);
  const cplx dir = std::abs(j) > 1e-8 ? j : cplx{1.0, 0.0};
  const cplx gt = (G(A(t + h), z) - G(A(t - h), z)) / (2.0 * h);
  const cplx gz = (G(centre_measure, z + dir * h) - G(centre_measure, z - dir * h)) / (2.0 * dir * h);
  return gt - j * gz;
}

cplx pde_residual(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                  const ToleranceConfig& cfg) {
  return is_additive(fam.kind) ? pde_residual_add(mu, fam, t, z, h, cfg)
                               : pde_residual_mult(mu, fam, t, z, h, cfg);
}

ConvergenceStudy pde_convergence(const Measure& mu, const FamilySpec& fam, double t, cplx z,
                                 double h, const ToleranceConfig& cfg) {
  ConvergenceStudy s;
  s.residual_h = pde_residual(mu, fam, t, z, h, cfg);
  s.residual_half = pde_residual(mu, fam, t, z, 0.5 * h, cfg);
  s.ratio = std::abs(s.residual_h) / std::abs(s.residual_half);
  s.order = std::log2(s.ratio);
  return s;
}

}  // namespace fpcalc
