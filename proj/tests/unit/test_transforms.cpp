#include <doctest.h>

#include <sstream>

#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/transforms.hpp"
#include "helpers.hpp"

using namespace fpcalc;
using testing::upper_points;

TEST_CASE("principal branch kernel") {
  CHECK(std::abs(principal_log({-1.0, 1e-300}) - cplx{0, kPi}) < 1e-15);
  CHECK(std::abs(principal_sqrt({-4.0, 0.0}) - cplx{0, 2}) < 1e-15);
  CHECK(std::abs(principal_pow({0, 1}, 0.5) - std::exp(cplx{0, kPi / 4})) < 1e-15);
}

TEST_CASE("F and eta of a point mass") {
  const Measure d = laws::delta(2.0);
  CHECK(std::abs(eval_F(d, {1, 1}) - cplx{-1, 1}) < 1e-15);
  CHECK(std::abs(eval_eta(d, {-0.5, 0}) - cplx{-1, 0}) < 1e-15);
}

TEST_CASE("Boolean and Bernoulli values") {
  // F of b_{1/2} at -4 is -4 - 2 = -6.
  CHECK(eval_F(laws::boolean_stable_plus(0.5), {-4, 0}).real() == doctest::Approx(-6.0));
  CHECK(eval_eta(laws::bernoulli_sigma(1.0), {-1, 0}).real() == doctest::Approx(-0.5));
  CHECK(eval_eta(laws::beta_alpha(0.5), {-3, 0}).real() == doctest::Approx(-1.0));
}

TEST_CASE("Sigma transform") {
  // Sigma of free Poisson is 1 - w.
  for (double w : {-0.5, -1.0, -2.0}) CHECK(eval_sigma(laws::free_poisson(), w) == doctest::Approx(1 - w));
  // Sigma of b_{1/2}: eta^{-1}(w) = -w^2, so Sigma(w) = -w.
  CHECK(eval_sigma(laws::boolean_stable_plus(0.5), -1.0) == doctest::Approx(1.0));
}

TEST_CASE("Voiculescu transform of the semicircle is t/z") {
  for (cplx z : {cplx{0, 3}, cplx{1, 4}, cplx{-2, 5}})
    CHECK(std::abs(eval_phi(laws::semicircle(1.0), z) - 1.0 / z) < 1e-10);
  CHECK(std::abs(eval_phi(laws::semicircle(2.0), {0.5, 4}) - 2.0 / cplx{0.5, 4}) < 1e-10);
}

TEST_CASE("Voiculescu transform of the symmetric Bernoulli law") {
  // phi = (-z + sqrt(z^2 + 4)) / 2 for (delta_-1 + delta_1) / 2.
  const Measure r = make_atomic({{-1, 0.5}, {1, 0.5}});
  // z = 2i is the branch point of the square root; stay above it.
  for (cplx z : {cplx{0, 3}, cplx{1, 3}}) {
    const cplx expected = 0.5 * (-z + principal_sqrt(z * z + 4.0));
    CHECK(std::abs(eval_phi(r, z) - expected) < 1e-10);
  }
}

TEST_CASE("cone membership") {
  CHECK(in_cone({0.5, 3}, 1.0, 2.0));
  CHECK_FALSE(in_cone({3, 2.5}, 1.0, 2.0));
  CHECK_FALSE(in_cone({0, 1}, 1.0, 2.0));
}

TEST_CASE("Stieltjes inversion of the semicircle") {
  const auto xs = linspace(-1.9, 1.9, 39);
  const GridDensity g = stieltjes_density(laws::semicircle(1.0), xs);
  for (std::size_t i = 0; i < xs.size(); ++i)
    CHECK(g.ps()[i] == doctest::Approx(std::sqrt(4 - xs[i] * xs[i]) / (2 * kPi)).epsilon(1e-6));
}

TEST_CASE("Stieltjes inversion refuses atoms") {
  CHECK_THROWS_AS(stieltjes_density(make_atomic({{0, 0.5}, {1, 0.5}}), linspace(-0.5, 1.5, 9)),
                  DomainError);
}

TEST_CASE("density CSV is written at full precision") {
  std::ostringstream out;
  write_density_csv(out, stieltjes_density(laws::semicircle(1.0), {0.0, 0.5}));
  CHECK(out.str().rfind("x,density\n", 0) == 0);
  // 17 significant digits: 0.5 is followed by its density with a long mantissa.
  CHECK(out.str().find("0.5,0.30") != std::string::npos);
  CHECK(out.str().find("0.318309886") != std::string::npos);
}

TEST_CASE("contour moments") {
  const auto m = moments_by_contour(laws::free_poisson(), 4, 6.0, 128);
  CHECK(m[0] == doctest::Approx(1).epsilon(1e-10));
  CHECK(m[1] == doctest::Approx(2).epsilon(1e-10));
  CHECK(m[2] == doctest::Approx(5).epsilon(1e-10));
  CHECK(m[3] == doctest::Approx(14).epsilon(1e-10));
}

TEST_CASE("conjugate symmetry below the axis") {
  const Measure pi = laws::free_poisson();
  for (cplx z : upper_points()) CHECK(std::abs(pi.cauchy(std::conj(z)) - std::conj(pi.cauchy(z))) < 1e-14);
}
