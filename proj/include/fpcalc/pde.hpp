#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// Convolution semigroups nu_t driving the two PDEs. The first six are
/// ↻-semigroups on R+ (unit delta_1), the last two ▷-semigroups on R (unit
/// delta_0).
enum class Family {
  BernoulliSigma,   // sigma_t
  BooleanDilation,  // delta_{e^-t}
  BernoulliRho,     // rho_{e^-t}
  BooleanStable,    // b^+_{e^-t}
  Beta,             // beta_{e^-t}
  ConstantMult,     // delta_1 for all t
  ArcsineAdditive,  // arcsine law with variance t
  CauchyAdditive,   // Cauchy law c_{at, bt}
};

struct FamilySpec {
  Family kind = Family::BernoulliSigma;
  double a = 0.0;  // Cauchy only
  double b = 0.0;  // Cauchy only, >= 0
};

FamilySpec parse_family(std::string_view name, double a = 0.0, double b = 0.0);
const char* to_string(Family f);
bool is_additive(Family f);
std::vector<Family> multiplicative_families();

/// nu_t; t >= 0.
Measure family_member(const FamilySpec& fam, double t);

/// Closed-form generator: K with z K(z) = d/dt eta_{nu_t}(z) at t = 0, or
/// J(z) = d/dt F_{nu_t}(z) at t = 0.
cplx generator(const FamilySpec& fam, cplx z);

/// One-sided difference (eta_{nu_h}(z)/z - 1)/h, or (F_{nu_h}(z) - z)/h.
cplx generator_fd(const FamilySpec& fam, cplx z, double h);

/// Central-difference residual of dH/dt + z K(H/z) dH/dz with
/// H(t, z) = z - F_{B_{nu_t}(mu)}(z).
cplx pde_residual_mult(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                       const ToleranceConfig& cfg = default_tolerances());

/// Central-difference residual of dG/dt - J(z - G) dG/dz with
/// G(t, z) = z - F_{A_{nu_t}(mu)}(z). The z-differences are taken along the
/// direction J(F) at the centre point (plain real steps when J vanishes).
cplx pde_residual_add(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                      const ToleranceConfig& cfg = default_tolerances());

/// Dispatches on is_additive(fam.kind).
cplx pde_residual(const Measure& mu, const FamilySpec& fam, double t, cplx z, double h,
                  const ToleranceConfig& cfg = default_tolerances());

struct ConvergenceStudy {
  cplx residual_h;
  cplx residual_half;
  double ratio;  // |R(h)| / |R(h/2)|
  double order;  // log2(ratio)
};

ConvergenceStudy pde_convergence(const Measure& mu, const FamilySpec& fam, double t, cplx z,
                                 double h, const ToleranceConfig& cfg = default_tolerances());

}  // namespace fpcalc
