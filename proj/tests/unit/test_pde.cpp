#include <doctest.h>

#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/pde.hpp"
#include "helpers.hpp"

using namespace fpcalc;

TEST_CASE("generator closed forms") {
  const cplx z{-0.7, 0.0};
  CHECK(generator(parse_family("bernoulli-sigma"), z) == z);
  CHECK(generator(parse_family("boolean-dilation"), z) == cplx{-1, 0});
  CHECK(std::abs(generator(parse_family("arcsine-additive"), cplx{0, 2}) - cplx{0, 0.5}) < 1e-15);
  CHECK(generator(parse_family("cauchy-additive", 0.5, 2.0), z) == cplx{-0.5, 2.0});
}

TEST_CASE("finite-difference generator audit") {
  const cplx z{-0.7, 0.0};
  for (const Family f : multiplicative_families()) {
    const FamilySpec fam{f, 0, 0};
    for (double h : {1e-3, 1e-4})
      CHECK(std::abs(generator_fd(fam, z, h) - generator(fam, z)) <= 10 * h);
  }
  const FamilySpec arcsine = parse_family("arcsine-additive");
  for (double h : {1e-3, 1e-4})
    CHECK(std::abs(generator_fd(arcsine, cplx{0.3, 2}, h) - generator(arcsine, cplx{0.3, 2})) <= 10 * h);
}

TEST_CASE("semigroup law of each family") {
  const double s = 0.3, t = 0.7;
  for (const Family f : multiplicative_families()) {
    const FamilySpec fam{f, 0, 0};
    const Measure a = family_member(fam, s), b = family_member(fam, t), ab = family_member(fam, s + t);
    for (double w : testing::negative_axis())
      CHECK(std::abs(a.eta(b.eta(w)) - ab.eta(w)) < 1e-10);
  }
  for (const FamilySpec fam : {parse_family("arcsine-additive"), parse_family("cauchy-additive", 0.5, 1.0)}) {
    const Measure a = family_member(fam, s), b = family_member(fam, t), ab = family_member(fam, s + t);
    for (cplx z : testing::upper_points())
      CHECK(std::abs(a.reciprocal(b.reciprocal(z)) - ab.reciprocal(z)) < 1e-10);
  }
}

TEST_CASE("exact residuals") {
  const Measure pi = laws::free_poisson();
  CHECK(std::abs(pde_residual(pi, parse_family("constant"), 1.0, {-2, 0}, 1e-2)) == 0.0);
  const Measure mu = make_atomic({{-1, 0.5}, {1, 0.5}});
  CHECK(std::abs(pde_residual(mu, parse_family("cauchy-additive", 0.5, 1.0), 1.0, {0.3, 1.5}, 1e-2)) < 1e-10);
}

TEST_CASE("second-order convergence") {
  const auto s = pde_convergence(laws::free_poisson(), parse_family("bernoulli-sigma"), 1.0, {-2, 0}, 0.02);
  CHECK(s.ratio == doctest::Approx(4.0).epsilon(0.05));
  const Measure mu = make_atomic({{-1, 0.5}, {1, 0.5}});
  const auto a = pde_convergence(mu, parse_family("arcsine-additive"), 1.0, {0, 3}, 0.02);
  CHECK(a.order == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("PDE input validation") {
  CHECK_THROWS_AS(parse_family("heat"), ParameterError);
  CHECK_THROWS_AS(parse_family("cauchy-additive", 0.0, -1.0), ParameterError);
  CHECK_THROWS_AS(pde_residual(laws::free_poisson(), parse_family("beta"), 0.01, {-2, 0}, 0.02),
                  ParameterError);
  CHECK_THROWS_AS(pde_residual_add(laws::free_poisson(), parse_family("beta"), 1, {-2, 0}, 0.02),
                  ParameterError);
}
