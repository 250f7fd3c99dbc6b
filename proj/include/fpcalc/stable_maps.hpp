#pragma once

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// M_alpha^+ on R+: F(z) = -(-F_mu(-(-z)^alpha))^{1/alpha}.
Measure m_alpha_plus(double alpha, const Measure& mu);
/// M_alpha^- on R-: F(z) = (F_mu(z^alpha))^{1/alpha}.
Measure m_alpha_minus(double alpha, const Measure& mu);
/// U_alpha^+ on R+: eta(z) = -(-eta_mu(-(-z)^alpha))^{1/alpha}.
Measure u_alpha_plus(double alpha, const Measure& mu);

/// Composite definitions of the two maps above, built from subordination
/// and free multiplicative powers. Used as an independent audit path.
Measure m_alpha_plus_composite(double alpha, const Measure& mu,
                               const ToleranceConfig& cfg = default_tolerances());
Measure u_alpha_plus_composite(double alpha, const Measure& mu,
                               const ToleranceConfig& cfg = default_tolerances());

/// Markov-Krein transform: G(z) = exp(int log(1/(z - x)) nu(dx)). Exact
/// product for atoms, otherwise the integral of G_nu - 1/s along the
/// vertical ray above z.
Measure markov_transform(const Measure& nu);

/// G_nu = -G_mu' / G_mu. Throws DomainError where |G_mu| < 1e-10.
Measure inverse_markov(const Measure& mu);

/// nu^{1/alpha} ⊛ b_alpha^+ (classical product with a Boolean stable law):
/// G(z) = (-z)^{alpha-1} G_nu(-(-z)^alpha).
Measure boolean_mixture(const Measure& nu, double alpha);

}  // namespace fpcalc
