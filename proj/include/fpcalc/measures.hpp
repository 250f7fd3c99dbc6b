#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fpcalc/measure.hpp"

namespace fpcalc {

using LawParams = std::map<std::string, double>;

/// Atomic measure on R; weights must be positive and sum to 1 within 1e-12.
/// Repeated locations are merged. The support class is inferred from signs.
Measure make_atomic(std::vector<Atom> atoms);

/// Atomic measure on the unit circle; `Atom::location` is the angle.
Measure make_circle_atomic(std::vector<Atom> atoms);

/// Measure backed by a sampled density (trapezoid Cauchy transform).
Measure make_grid(GridDensity density);

/// Named closed-form law. Recognised names:
///   delta(a), bernoulli_sigma(t), bernoulli_rho(t), boolean_stable_plus(alpha),
///   boolean_stable_minus(alpha), free_stable_plus(alpha), free_stable_minus(alpha),
///   monotone_stable_plus(alpha), monotone_stable_minus(alpha), free_poisson,
///   beta(p, q), beta_alpha(alpha), cauchy(a, b), arcsine(t), semicircle(t),
///   mu_alpha_p(alpha, p), nu_p(p), tau_p(p), circle_cauchy(a, b).
Measure make_named(std::string_view kind, const LawParams& params = {});

/// Law of aX for X ~ mu.
Measure dilate(double a, const Measure& mu);

/// Push-forward of a measure on R+ by x -> x^p (atomic or grid measures).
Measure power_pushforward(double p, const Measure& mu);

/// First n raw moments m_1..m_n of an atomic or grid measure.
std::vector<double> moments(const Measure& mu, int n);

namespace laws {

Measure delta(double a);
Measure bernoulli_sigma(double t);
Measure bernoulli_rho(double t);
Measure boolean_stable_plus(double alpha);
Measure free_stable_plus(double alpha);
Measure monotone_stable_plus(double alpha);
Measure free_poisson();
Measure beta(double p, double q);
Measure beta_alpha(double alpha);
Measure cauchy(double a, double b);
Measure arcsine(double variance);
Measure semicircle(double variance);
Measure mu_alpha_p(double alpha, double p);
Measure nu_p(double p);
Measure tau_p(double p);
Measure circle_cauchy(double a, double b);

}  // namespace laws

}  // namespace fpcalc
