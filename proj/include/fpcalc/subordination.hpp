#pragma once

#include <cstddef>
#include <vector>

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// B_sigma(mu) for sigma, mu on R+, sigma != delta_0: the measure with
/// Sigma_{B}(w) = Sigma_mu(eta_sigma(w)), so that sigma ⊠ mu = sigma ↻ B.
Measure mult_subordinate(const Measure& sigma, const Measure& mu,
                         const ToleranceConfig& cfg = default_tolerances());

/// A_sigma(mu) for measures on R: phi_{A}(z) = phi_mu(F_sigma(z)), so that
/// sigma ⊞ mu = sigma |> A. F_A is the subordination function of sigma ⊞ mu.
Measure add_subordinate(const Measure& sigma, const Measure& mu,
                        const ToleranceConfig& cfg = default_tolerances());

/// Closed form F(z) = F_mu(z - a + ib) + a - ib.
Measure cauchy_subordinate(double a, double b, const Measure& mu);

/// (mu^{⊞(1+t)})^{⊎1/(1+t)}.
Measure belinschi_nica(double t, const Measure& mu,
                       const ToleranceConfig& cfg = default_tolerances());

/// Largest |eta| gap between the power formula and B_{sigma_t}(mu) on the
/// given negative reals.
double belinschi_nica_discrepancy(double t, const Measure& mu, const std::vector<double>& ws,
                                  const ToleranceConfig& cfg = default_tolerances());

/// B_mu(mu) from Sigma(w) = w / eta_mu(w).
Measure bp_map_mult(const Measure& mu, const ToleranceConfig& cfg = default_tolerances());
/// A_mu(mu) from phi(z) = z - F_mu(z).
Measure bp_map_add(const Measure& mu, const ToleranceConfig& cfg = default_tolerances());

/// Circle analogue: eta(z) = eta_mu(c z) / c with c = exp(-a + ib).
Measure circle_subordinate(double a, double b, const Measure& mu);

struct Rect {
  double x0, x1, y0, y1;
};

struct InjectivityWitness {
  cplx w1, w2;
  cplx f1, f2;
};

struct UnivalenceReport {
  int n = 0;
  std::size_t evaluated = 0;
  std::size_t failed_evaluations = 0;
  std::size_t candidates_refined = 0;
  std::vector<InjectivityWitness> witnesses;
  bool injective() const { return witnesses.empty(); }
};

/// Looks for two distinct points of `region` with equal F. Near-collisions
/// on an n x n grid are refined by Newton on F(w) = F(w_i) seeded at w_j; a
/// refined point inside the region, away from w_i, with |dF| < 1e-9 is a
/// witness.
UnivalenceReport univalence_grid_check(const Measure& mu, const Rect& region, int n,
                                       std::size_t max_witnesses = 8);

}  // namespace fpcalc
