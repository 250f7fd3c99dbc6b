#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// F_{mu |> nu} = F_mu o F_nu.
Measure add_monotone(const Measure& mu, const Measure& nu);

/// eta_{mu ⊎ nu} = eta_mu + eta_nu (on R, or both on the circle).
Measure add_boolean(const Measure& mu, const Measure& nu);
/// eta scaled by s >= 0.
Measure boolean_power(const Measure& mu, double s);

/// Free additive convolution through the subordination equation
/// F_nu(z - u + F_mu(u)) = F_mu(u), continued down from above z.
Measure add_free(const Measure& mu, const Measure& nu,
                 const ToleranceConfig& cfg = default_tolerances());
/// mu^{⊞t}, t >= 1: t u - (t - 1) F_mu(u) = z, F = F_mu(u).
Measure free_power(const Measure& mu, double t,
                   const ToleranceConfig& cfg = default_tolerances());

/// eta_{mu ↻ nu} = eta_mu o eta_nu. mu on R+ and nu on R, or both on the circle.
Measure mul_monotone(const Measure& mu, const Measure& nu);

/// Free multiplicative convolution of two measures on R+, neither delta_0.
Measure mul_free(const Measure& mu, const Measure& nu,
                 const ToleranceConfig& cfg = default_tolerances());
/// mu^{⊠t}, t >= 1.
Measure mul_free_power(const Measure& mu, double t,
                       const ToleranceConfig& cfg = default_tolerances());

enum class ConvolutionKind { AddFree, AddBoolean, AddMonotone, MulFree, MulMonotone };

ConvolutionKind parse_convolution_kind(std::string_view name);
const char* to_string(ConvolutionKind kind);

/// Dispatches to the closure constructor for `kind`.
Measure convolve(ConvolutionKind kind, const Measure& mu, const Measure& nu,
                 const ToleranceConfig& cfg = default_tolerances());

/// First n moments of the convolution of two atomic measures computed with
/// truncated power series only (no root finding). n <= 12.
std::vector<double> series_oracle(const std::vector<Atom>& mu, const std::vector<Atom>& nu,
                                  ConvolutionKind kind, int n);

}  // namespace fpcalc
