#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// G, F and eta with a support check: real z on the support (or |z| = 1 for
/// circle measures) raises DomainError unless G extends across the real axis.
cplx eval_G(const Measure& mu, cplx z);
cplx eval_F(const Measure& mu, cplx z);
cplx eval_eta(const Measure& mu, cplx z);

/// Sigma-transform on (eta(-inf), 0) for half-line measures other than delta_0.
double eval_sigma(const Measure& mu, double w);

/// Voiculescu transform F^{-1}(z) - z for a measure on R, by continuation
/// from a point high above z.
cplx eval_phi(const Measure& mu, cplx z, const ToleranceConfig& cfg = default_tolerances());

/// Cone height used when picking continuation anchors: cfg.cone_height, or
/// 10 (1 + support radius) when that is 0. Unbounded supports fall back to
/// 10 (1 + |z|).
double cone_height(const Measure& mu, cplx z, const ToleranceConfig& cfg);

/// Membership in the truncated cone {|Re z| < slope * Im z, Im z > height}.
bool in_cone(cplx z, double slope, double height);

struct DensitySample {
  double x;
  double density;
  /// Set when the y-extrapolation diverged, which signals an atom nearby.
  bool atom_nearby;
};

/// Stieltjes inversion -Im G(x + iy) / pi extrapolated to y = 0 from
/// `y_levels` (cfg.inversion_y_levels when empty). Values above -mass_tol
/// are clipped to 0; anything more negative is kept so callers can see it.
std::vector<DensitySample> stieltjes_samples(const Measure& mu, const std::vector<double>& xs,
                                             const ToleranceConfig& cfg = default_tolerances(),
                                             std::vector<double> y_levels = {},
                                             double mass_tol = 1e-3);

/// As stieltjes_samples, but throws DomainError listing every point where
/// an atom was detected.
GridDensity stieltjes_density(const Measure& mu, const std::vector<double>& xs,
                              const ToleranceConfig& cfg = default_tolerances(),
                              std::vector<double> y_levels = {}, double mass_tol = 1e-3);

/// `x,density` CSV at 17 significant digits.
void write_density_csv(std::ostream& out, const GridDensity& density);

/// m_1..m_n from the contour integral of z^k G(z) over |z| = rho with N
/// midpoint nodes. Requires rho beyond the support.
std::vector<double> moments_by_contour(const Measure& mu, int n, double rho, int nodes = 64);

/// n evenly spaced points on [a, b].
std::vector<double> linspace(double a, double b, int n);

}  // namespace fpcalc
