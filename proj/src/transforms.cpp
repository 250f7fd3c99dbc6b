#include "fpcalc/transforms.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/parallel.hpp"
#include "fpcalc/solvers.hpp"

namespace fpcalc {

namespace {

void check_off_support(const Measure& mu, cplx z, const char* what) {
  if (mu.support() == Support::UnitCircle) {
    if (std::abs(std::abs(z) - 1.0) < 1e-15)
      throw DomainError(std::string(what) + ": point on the unit circle");
    return;
  }
  if (z.imag() != 0.0 || mu.analytic_on_real_axis()) return;
  const double x = z.real();
  if (mu.is_atomic()) {
    for (const auto& a : mu.atoms())
      if (a.location == x) throw DomainError(std::string(what) + ": z is an atom");
    return;
  }
  const double r = mu.radius();
  bool on = false;
  switch (mu.support()) {
    case Support::PositiveHalfLine: on = x >= 0 && x <= r; break;
    case Support::NegativeHalfLine: on = x <= 0 && x >= -r; break;
    default: on = std::abs(x) <= r;
  }
  if (on) {
    std::ostringstream os;
    os << what << ": z = " << x << " lies on the support of " << mu.label();
    throw DomainError(os.str());
  }
}

}  // namespace

cplx eval_G(const Measure& mu, cplx z) {
  check_off_support(mu, z, "G");
  return mu.cauchy(z);
}

cplx eval_F(const Measure& mu, cplx z) {
  check_off_support(mu, z, "F");
  return mu.reciprocal(z);
}

cplx eval_eta(const Measure& mu, cplx z) {
  if (z != cplx{0.0, 0.0}) check_off_support(mu, 1.0 / z, "eta");
  return mu.eta(z);
}

double eval_sigma(const Measure& mu, double w) {
  switch (mu.support()) {
    case Support::NegativeHalfLine: return -eval_sigma(dilate(-1.0, mu), w);
    case Support::PositiveHalfLine: break;
    default: throw ParameterError("Sigma: measure must live on a half-line");
  }
  if (mu.is_delta_zero()) throw ParameterError("Sigma: undefined for delta_0");
  const double lower = mu.eta_limit();
  if (!(w > lower && w < 0)) {
    std::ostringstream os;
    os << "Sigma: w = " << w << " outside (" << lower << ", 0)";
    throw DomainError(os.str());
  }
  const double x = solve_negative_axis([&](double t) { return mu.eta_real(t) - w; });
  return x / w;
}

double cone_height(const Measure& mu, cplx z, const ToleranceConfig& cfg) {
  if (cfg.cone_height > 0) return cfg.cone_height;
  const double r = mu.radius();
  return 10.0 * (1.0 + (std::isfinite(r) ? r : std::abs(z)));
}

bool in_cone(cplx z, double slope, double height) {
  return z.imag() > height && std::abs(z.real()) < slope * z.imag();
}

cplx eval_phi(const Measure& mu, cplx z, const ToleranceConfig& cfg) {
  if (mu.support() == Support::UnitCircle) throw ParameterError("phi: measure must live on R");
  if (z.imag() == 0.0) throw DomainError("phi: z must be off the real axis");
  if (z.imag() < 0) return std::conj(eval_phi(mu, std::conj(z), cfg));
  if (auto a = mu.point_location()) return *a;
  const cplx anchor = z + cplx{0.0, cone_height(mu, z, cfg)};
  const ComplexFn f = [&](cplx w) { return mu.reciprocal(w); };
  try {
    const cplx w = invert_analytic(f, z, anchor, cfg, [](cplx u) { return u.imag() > 0; });
    return w - z;
  } catch (const ConvergenceError& e) {
    throw DomainError(std::string("phi: z outside the inversion domain (") + e.what() + ")");
  }
}

std::vector<DensitySample> stieltjes_samples(const Measure& mu, const std::vector<double>& xs,
                                             const ToleranceConfig& cfg,
                                             std::vector<double> y_levels, double mass_tol) {
  if (mu.support() == Support::UnitCircle)
    throw ParameterError("density: circle measures are not supported");
  if (y_levels.empty()) y_levels = cfg.inversion_y_levels;
  for (std::size_t i = 0; i < y_levels.size(); ++i)
    if (!(y_levels[i] > 0) || (i > 0 && !(y_levels[i] < y_levels[i - 1])))
      throw ParameterError("density: y-levels must be positive and strictly decreasing");

  std::vector<DensitySample> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t i) {
    const double x = xs[i];
    DensitySample s{x, 0.0, false};
    if (mu.analytic_on_real_axis()) {
      s.density = -mu.cauchy(cplx{x, 0.0}).imag() / kPi;
    } else {
      const std::size_t n = y_levels.size();
      std::vector<double> d(n);
      for (std::size_t k = 0; k < n; ++k) d[k] = -mu.cauchy(cplx{x, y_levels[k]}).imag() / kPi;
      if (n >= 3) {
        const double last = std::abs(d[n - 1] - d[n - 2]);
        const double prev = std::abs(d[n - 2] - d[n - 3]);
        s.atom_nearby = last > 1.5 * prev && last > 1e-9;
      }
      // Lagrange extrapolation to y = 0.
      double value = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        double weight = 1.0;
        for (std::size_t j = 0; j < n; ++j)
          if (j != k) weight *= y_levels[j] / (y_levels[j] - y_levels[k]);
        value += weight * d[k];
      }
      s.density = value;
    }
    if (s.density < 0 && s.density > -mass_tol) s.density = 0.0;
    out[i] = s;
  });
  return out;
}

GridDensity stieltjes_density(const Measure& mu, const std::vector<double>& xs,
                              const ToleranceConfig& cfg, std::vector<double> y_levels,
                              double mass_tol) {
  const auto samples = stieltjes_samples(mu, xs, cfg, std::move(y_levels), mass_tol);
  std::ostringstream bad;
  std::vector<double> ps;
  ps.reserve(samples.size());
  for (const auto& s : samples) {
    if (s.atom_nearby) bad << (bad.tellp() > 0 ? ", " : "") << s.x;
    ps.push_back(std::max(s.density, 0.0));
  }
  if (bad.tellp() > 0)
    throw DomainError("density: extrapolation diverged (atom nearby) at x = " + bad.str());
  return GridDensity(xs, std::move(ps), mass_tol);
}

void write_density_csv(std::ostream& out, const GridDensity& density) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "x,density\n" << std::setprecision(17);
  for (std::size_t i = 0; i < density.xs().size(); ++i)
    out << density.xs()[i] << ',' << density.ps()[i] << '\n';
  out.flags(flags);
  out.precision(precision);
}

std::vector<double> moments_by_contour(const Measure& mu, int n, double rho, int nodes) {
  if (mu.support() == Support::UnitCircle)
    throw ParameterError("contour moments: circle measures are not supported");
  if (n < 1 || nodes < 2 * n + 2) throw ParameterError("contour moments: need nodes >= 2n + 2");
  if (!(rho > 0) || rho <= mu.radius()) throw ParameterError("contour moments: rho inside the support");
  std::vector<cplx> zs(static_cast<std::size_t>(nodes));
  std::vector<cplx> gs(zs.size());
  for (int j = 0; j < nodes; ++j) zs[static_cast<std::size_t>(j)] = std::polar(rho, 2.0 * kPi * (j + 0.5) / nodes);
  // Conjugate symmetry: only the upper half of the nodes is evaluated.
  parallel_for(zs.size() / 2, [&](std::size_t j) {
    gs[j] = mu.cauchy(zs[j]);
    gs[zs.size() - 1 - j] = std::conj(gs[j]);
  });
  if (zs.size() % 2) gs[zs.size() / 2] = mu.cauchy(zs[zs.size() / 2]);
  std::vector<double> m(static_cast<std::size_t>(n), 0.0);
  for (std::size_t j = 0; j < zs.size(); ++j) {
    cplx zk = zs[j];
    for (int k = 1; k <= n; ++k) {
      zk *= zs[j];
      m[static_cast<std::size_t>(k - 1)] += (zk * gs[j]).real();
    }
  }
  for (auto& v : m) v /= nodes;
  return m;
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) throw ParameterError("linspace: n must be >= 1");
  std::vector<double> xs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) xs[static_cast<std::size_t>(i)] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return xs;
}

}  // namespace fpcalc
