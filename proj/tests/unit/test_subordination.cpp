#include <doctest.h>

#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/subordination.hpp"
#include "fpcalc/transforms.hpp"
#include "helpers.hpp"

using namespace fpcalc;
using testing::negative_axis;
using testing::upper_points;

namespace {
const Measure kSym = make_atomic({{-1, 0.5}, {1, 0.5}});
}

TEST_CASE("B over delta_1 is the identity") {
  const Measure pi = laws::free_poisson();
  const Measure b = mult_subordinate(laws::delta(1.0), pi);
  for (double w : negative_axis()) CHECK(std::abs(b.eta(w) - pi.eta(w)) < 1e-14);
  CHECK_THROWS_AS(mult_subordinate(laws::delta(0.0), pi), ParameterError);
}

TEST_CASE("multiplicative subordination satisfies its defining relation") {
  // eta_{sigma boxtimes mu} = eta_sigma o eta_{B_sigma(mu)}, with the free
  // product solved through the other subordination function.
  const Measure sigma = laws::beta_alpha(0.5);
  const Measure mu = laws::free_poisson();
  const Measure prod = mul_free(mu, sigma);
  const Measure b = mult_subordinate(sigma, mu);
  for (double w : negative_axis()) CHECK(std::abs(prod.eta(w) - sigma.eta(b.eta(w))) < 1e-10);
}

TEST_CASE("Belinschi-Nica power formula against subordination") {
  const auto ws = negative_axis();
  CHECK(belinschi_nica_discrepancy(1.0, laws::free_poisson(), ws) < 1e-10);
  CHECK(belinschi_nica_discrepancy(0.5, laws::bernoulli_rho(0.5), ws) < 1e-10);
  const Measure same = belinschi_nica(0.0, laws::free_poisson());
  CHECK(std::abs(same.eta(-1.0) - laws::free_poisson().eta(-1.0)) < 1e-15);
}

TEST_CASE("additive subordination basics") {
  const Measure a = add_subordinate(laws::delta(0.0), kSym);
  for (cplx z : upper_points()) CHECK(std::abs(a.reciprocal(z) - kSym.reciprocal(z)) < 1e-12);
  const Measure d = add_subordinate(laws::semicircle(1.0), laws::delta(0.7));
  for (cplx z : upper_points()) CHECK(std::abs(d.reciprocal(z) - (z - 0.7)) < 1e-12);
}

TEST_CASE("additive subordination satisfies its defining relation") {
  const Measure sigma = laws::semicircle(1.0);
  const Measure sum = add_free(kSym, sigma);
  const Measure a = add_subordinate(sigma, kSym);
  for (cplx z : upper_points())
    CHECK(std::abs(sum.reciprocal(z) - sigma.reciprocal(a.reciprocal(z))) < 1e-10);
}

TEST_CASE("Cauchy subordination: closed form") {
  const Measure a = cauchy_subordinate(0.0, 2.0, kSym);
  // Density 2 / (pi (1 + x^2)^2) for the symmetric Bernoulli law and b = 2.
  const GridDensity g = stieltjes_density(a, {0.0, 1.0, 3.0});
  CHECK(g.ps()[0] == doctest::Approx(2 / kPi).epsilon(1e-10));
  CHECK(g.ps()[1] == doctest::Approx(2 / (kPi * 4)).epsilon(1e-10));
  CHECK(g.ps()[2] == doctest::Approx(2 / (kPi * 100)).epsilon(1e-10));
  CHECK_THROWS_AS(cauchy_subordinate(0.0, -1.0, kSym), ParameterError);
}

TEST_CASE("Cauchy subordination agrees with the generic path") {
  const Measure closed = cauchy_subordinate(1.0, 3.0, kSym);
  const Measure generic = add_subordinate(laws::cauchy(1.0, 3.0), kSym);
  for (cplx z : upper_points()) CHECK(std::abs(closed.reciprocal(z) - generic.reciprocal(z)) < 1e-10);
}

TEST_CASE("Cauchy subordination preserves the first two moments") {
  // Moments via the asymptotics of F: F(z) = z - m1 - (m2 - m1^2)/z + ...
  const Measure mu = make_atomic({{-1, 0.2}, {0.5, 0.5}, {3, 0.3}});
  const Measure a = cauchy_subordinate(1.0, 3.0, mu);
  const cplx z{0, 1e5};
  const cplx tail = z - a.reciprocal(z);
  const double m1 = 0.2 * -1 + 0.5 * 0.5 + 0.3 * 3;
  const double m2 = 0.2 + 0.5 * 0.25 + 0.3 * 9;
  CHECK(tail.real() == doctest::Approx(m1).epsilon(1e-6));
  CHECK((tail - m1).imag() * z.imag() == doctest::Approx(-(m2 - m1 * m1)).epsilon(1e-4));
}

TEST_CASE("Bercovici-Pata maps") {
  const Measure bp = bp_map_add(kSym);
  // phi = 1/z: the standard semicircle.
  const Measure sc = laws::semicircle(1.0);
  for (cplx z : upper_points()) CHECK(std::abs(bp.reciprocal(z) - sc.reciprocal(z)) < 1e-10);
  const Measure d = bp_map_add(laws::delta(0.3));
  CHECK(std::abs(d.reciprocal({0, 1}) - cplx{-0.3, 1}) < 1e-15);
  CHECK_THROWS_AS(bp_map_mult(laws::delta(0.0)), ParameterError);
  const Measure beta = laws::beta(2, 1);
  const Measure fast = bp_map_mult(beta);
  const Measure generic = mult_subordinate(beta, beta);
  for (double w : negative_axis()) CHECK(std::abs(fast.eta(w) - generic.eta(w)) < 1e-10);
}

TEST_CASE("circle subordination") {
  const Measure mu = make_circle_atomic({{0.4, 0.5}, {2.0, 0.5}});
  const Measure same = circle_subordinate(0.0, 0.0, mu);
  const cplx z{0.3, 0.2};
  CHECK(std::abs(same.eta(z) - mu.eta(z)) < 1e-15);
  const Measure one = circle_subordinate(0.5, 1.0, make_circle_atomic({{0.0, 1.0}}));
  CHECK(std::abs(one.eta(z) - z) < 1e-14);
  CHECK_THROWS_AS(circle_subordinate(0.5, 1.0, laws::free_poisson()), ParameterError);
}

TEST_CASE("univalence check") {
  const Rect region{-5, 5, 0.1, 5};
  CHECK(univalence_grid_check(laws::delta(1.0), region, 16).injective());
  // F(w) = w - 1/w identifies w with -1/w.
  const auto slit = univalence_grid_check(kSym, region, 32);
  REQUIRE_FALSE(slit.injective());
  const auto& w = slit.witnesses.front();
  CHECK(std::abs(w.w1 * w.w2 + 1.0) < 1e-6);
}
