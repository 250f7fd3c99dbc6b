#include <doctest.h>

#include "fpcalc/errors.hpp"
#include "fpcalc/measure.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/stable_maps.hpp"
#include "helpers.hpp"

using namespace fpcalc;
using testing::max_gap;
using testing::negative_axis;
using testing::upper_points;

namespace {
const Measure kPos = make_atomic({{0.5, 0.4}, {2, 0.6}});

double f_gap(const Measure& a, const Measure& b) {
  return max_gap(upper_points(), [&](cplx z) { return a.reciprocal(z); },
                 [&](cplx z) { return b.reciprocal(z); });
}
}  // namespace

TEST_CASE("alpha = 1 maps are the identity") {
  CHECK(f_gap(m_alpha_plus(1.0, kPos), kPos) < 1e-14);
  CHECK(f_gap(u_alpha_plus(1.0, kPos), kPos) < 1e-14);
  CHECK_THROWS_AS(m_alpha_plus(1.5, kPos), ParameterError);
  CHECK_THROWS_AS(m_alpha_plus(0.0, kPos), ParameterError);
}

TEST_CASE("M_alpha of delta_1 is the monotone stable law") {
  for (double a : {1.0 / 3, 0.5, 2.0 / 3})
    CHECK(f_gap(m_alpha_plus(a, laws::delta(1.0)), laws::monotone_stable_plus(a)) < 1e-12);
}

TEST_CASE("M_alpha minus is the reflected M_alpha plus") {
  const Measure lhs = dilate(-1.0, m_alpha_minus(0.5, dilate(-1.0, kPos)));
  CHECK(f_gap(lhs, m_alpha_plus(0.5, kPos)) < 1e-12);
  const Measure m = m_alpha_minus(0.5, laws::delta(-1.0));
  CHECK(f_gap(m, dilate(-1.0, laws::monotone_stable_plus(0.5))) < 1e-12);
}

TEST_CASE("U_alpha fixes delta_1") {
  const Measure u = u_alpha_plus(0.5, laws::delta(1.0));
  for (double w : negative_axis()) CHECK(std::abs(u.eta(w) - w) < 1e-14);
}

TEST_CASE("closed formulas agree with their subordination composites") {
  const Measure mu = laws::beta(2, 1);
  for (double w : negative_axis()) {
    CHECK(std::abs(m_alpha_plus(0.5, mu).eta(w) - m_alpha_plus_composite(0.5, mu).eta(w)) < 1e-9);
    CHECK(std::abs(u_alpha_plus(0.5, mu).eta(w) - u_alpha_plus_composite(0.5, mu).eta(w)) < 1e-9);
  }
}

TEST_CASE("Markov transform of atoms") {
  CHECK(f_gap(markov_transform(laws::delta(1.0)), laws::delta(1.0)) < 1e-15);
  // Two equal atoms at 0 and 1 give the arcsine law on (0, 1).
  const Measure m = markov_transform(make_atomic({{0, 0.5}, {1, 0.5}}));
  for (cplx z : upper_points())
    CHECK(std::abs(m.cauchy(z) - 1.0 / (principal_sqrt(z) * principal_sqrt(z - 1.0))) < 1e-14);
}

TEST_CASE("general Markov path agrees with the product formula") {
  // Hide the atoms behind a closure so the ray-quadrature path is taken.
  const Measure atomic = make_atomic({{-1, 0.3}, {0.5, 0.2}, {2, 0.5}});
  const Measure hidden = make_closure("hidden", Support::RealLine, Primary::Cauchy,
                                      [atomic](cplx z) { return atomic.cauchy(z); }, 2.0);
  const Measure quad = markov_transform(hidden);
  const Measure exact = markov_transform(atomic);
  for (cplx z : upper_points()) CHECK(std::abs(quad.cauchy(z) - exact.cauchy(z)) < 1e-10);
}

TEST_CASE("inverse Markov transform") {
  const Measure pi = laws::free_poisson();
  const Measure round = markov_transform(inverse_markov(pi));
  for (cplx z : upper_points()) CHECK(std::abs(round.cauchy(z) - pi.cauchy(z)) < 1e-8);
  const Measure nu = inverse_markov(laws::beta(0.5, 1.5));
  for (cplx z : upper_points()) CHECK(std::abs(nu.cauchy(z) - laws::nu_p(0.5).cauchy(z)) < 1e-8);
}

TEST_CASE("nu_p carries an atom p at 0") {
  const Measure nu = laws::nu_p(0.5);
  // -i y G(i y) tends to the mass at 0.
  const double y = 1e-9;
  CHECK((cplx{0, y} * nu.cauchy({0, y})).real() == doctest::Approx(0.5).epsilon(1e-3));
}

TEST_CASE("Boolean stable mixtures") {
  const Measure b = boolean_mixture(laws::delta(1.0), 0.5);
  CHECK(f_gap(b, laws::boolean_stable_plus(0.5)) < 1e-14);
  // Mixing by delta_c scales b_alpha by c^{1/alpha}.
  const Measure scaled = boolean_mixture(laws::delta(3.0), 0.5);
  CHECK(f_gap(scaled, dilate(9.0, laws::boolean_stable_plus(0.5))) < 1e-12);
  CHECK_THROWS_AS(boolean_mixture(laws::semicircle(1.0), 0.5), ParameterError);
}

TEST_CASE("Markov transform intertwines mixtures and M_alpha") {
  const Measure lhs = markov_transform(boolean_mixture(kPos, 0.5));
  const Measure rhs = m_alpha_plus(0.5, markov_transform(kPos));
  CHECK(f_gap(lhs, rhs) < 1e-8);
}

TEST_CASE("special laws") {
  CHECK(f_gap(laws::mu_alpha_p(1.0, 0.5), laws::beta(0.5, 1.5)) < 1e-10);
  CHECK(f_gap(laws::mu_alpha_p(0.5, 0.5), m_alpha_plus(0.5, laws::beta(0.5, 1.5))) < 1e-10);
  CHECK_THROWS_AS(laws::tau_p(1.0), ParameterError);
}

TEST_CASE("M_alpha(rho_alpha) is not beta_alpha, the Markov transform of rho_alpha is") {
  // At z = -1, alpha = 1/2: F_{M(rho)}(-1) = -16/9 while F_beta(-1) = -sqrt 2.
  const Measure m = m_alpha_plus(0.5, laws::bernoulli_rho(0.5));
  CHECK(m.reciprocal(-1.0).real() == doctest::Approx(-16.0 / 9));
  CHECK(laws::beta_alpha(0.5).reciprocal(-1.0).real() == doctest::Approx(-std::sqrt(2.0)));
  CHECK(f_gap(markov_transform(laws::bernoulli_rho(0.5)), laws::beta_alpha(0.5)) < 1e-12);
}
