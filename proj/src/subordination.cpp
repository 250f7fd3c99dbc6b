#include "fpcalc/subordination.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "closure_kit.hpp"
#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/transforms.hpp"

namespace fpcalc {

namespace {

void require_half_line(const Measure& m, const char* op, const char* role) {
  if (m.support() != Support::PositiveHalfLine)
    throw ParameterError(std::string(op) + ": " + role + " must live on the positive half-line");
}

void require_line(const Measure& m, const char* op) {
  if (m.support() == Support::UnitCircle)
    throw ParameterError(std::string(op) + ": measure must live on R");
}

double height_for(const Measure& a, const Measure& b, cplx z, const ToleranceConfig& cfg) {
  if (cfg.cone_height > 0) return cfg.cone_height;
  const double r = a.radius() + b.radius();
  return 10.0 * (1.0 + (std::isfinite(r) ? r : std::abs(z)));
}

}  // namespace

Measure mult_subordinate(const Measure& sigma, const Measure& mu, const ToleranceConfig& cfg) {
  require_half_line(sigma, "B_sigma", "sigma");
  require_half_line(mu, "B_sigma", "mu");
  if (sigma.is_delta_zero()) throw ParameterError("B_sigma: sigma = delta_0 is excluded");
  if (detail::point_mass(mu)) return mu;
  if (const auto c = detail::point_mass(sigma); c && *c == 1.0) return mu;
  detail::ImplicitProblem p;
  p.residual = [sigma, mu](cplx w, cplx z) {
    const cplx v = sigma.eta(w);
    return mu.eta(z * v / w) - v;
  };
  p.result = [](cplx w, cplx) { return w; };
  return detail::closure("B[" + sigma.label() + "](" + mu.label() + ")",
                         Support::PositiveHalfLine, Primary::Eta,
                         [p, cfg](cplx z) { return detail::solve_on_slit_plane(p, z, cfg); },
                         std::numeric_limits<double>::infinity());
}

Measure add_subordinate(const Measure& sigma, const Measure& mu, const ToleranceConfig& cfg) {
  require_line(sigma, "A_sigma");
  require_line(mu, "A_sigma");
  if (detail::point_mass(mu)) return mu;
  if (const auto a = detail::point_mass(sigma)) return cauchy_subordinate(*a, 0.0, mu);
  detail::ImplicitProblem p;
  p.residual = [sigma, mu](cplx u, cplx z) {
    const cplx fs = sigma.reciprocal(u);
    return mu.reciprocal(z - u + fs) - fs;
  };
  p.result = [](cplx u, cplx) { return u; };
  auto d = detail::closure_data(
      "A[" + sigma.label() + "](" + mu.label() + ")", Support::RealLine, Primary::Reciprocal,
      [sigma, mu, p, cfg](cplx z) {
        return detail::solve_from_above(p, z, height_for(sigma, mu, z, cfg), cfg);
      },
      std::numeric_limits<double>::infinity());
  // The subordination function inherits analyticity across R from F_sigma.
  d.analytic_on_real_axis = sigma.analytic_on_real_axis();
  return Measure(std::move(d));
}

Measure cauchy_subordinate(double a, double b, const Measure& mu) {
  if (!(b >= 0)) throw ParameterError("A_{a,b}: b must be >= 0");
  require_line(mu, "A_{a,b}");
  if (a == 0 && b == 0) return mu;
  if (detail::point_mass(mu)) return mu;
  const cplx shift{-a, b};
  std::ostringstream label;
  label << "A[" << a << "," << b << "](" << mu.label() << ")";
  auto d = detail::closure_data(label.str(), Support::RealLine, Primary::Reciprocal,
                                [mu, shift](cplx z) { return mu.reciprocal(z + shift) - shift; },
                                b > 0 ? std::numeric_limits<double>::infinity()
                                      : std::abs(a) + mu.radius(),
                                false);
  d.analytic_on_real_axis = b > 0 || mu.analytic_on_real_axis();
  return Measure(std::move(d));
}

Measure belinschi_nica(double t, const Measure& mu, const ToleranceConfig& cfg) {
  if (!(t >= 0)) throw ParameterError("Belinschi-Nica: t must be >= 0");
  if (t == 0) return mu;
  return boolean_power(free_power(mu, 1.0 + t, cfg), 1.0 / (1.0 + t));
}

double belinschi_nica_discrepancy(double t, const Measure& mu, const std::vector<double>& ws,
                                  const ToleranceConfig& cfg) {
  const Measure power = belinschi_nica(t, mu, cfg);
  const Measure sub = mult_subordinate(laws::bernoulli_sigma(t), mu, cfg);
  double worst = 0.0;
  for (double w : ws) worst = std::max(worst, std::abs(power.eta(w) - sub.eta(w)));
  return worst;
}

Measure bp_map_mult(const Measure& mu, const ToleranceConfig& cfg) {
  require_half_line(mu, "B_mu(mu)", "mu");
  if (mu.is_delta_zero()) throw ParameterError("B_mu(mu): mu = delta_0 is excluded");
  if (detail::point_mass(mu)) return mu;
  detail::ImplicitProblem p;
  p.residual = [mu](cplx w, cplx z) { return w * w - z * mu.eta(w); };
  p.result = [](cplx w, cplx) { return w; };
  return detail::closure("BP[x](" + mu.label() + ")", Support::PositiveHalfLine, Primary::Eta,
                         [p, cfg](cplx z) { return detail::solve_on_slit_plane(p, z, cfg); },
                         std::numeric_limits<double>::infinity());
}

Measure bp_map_add(const Measure& mu, const ToleranceConfig& cfg) {
  require_line(mu, "A_mu(mu)");
  if (detail::point_mass(mu)) return mu;
  detail::ImplicitProblem p;
  p.residual = [mu](cplx u, cplx z) { return 2.0 * u - mu.reciprocal(u) - z; };
  p.result = [](cplx u, cplx) { return u; };
  return detail::closure(
      "BP[+](" + mu.label() + ")", Support::RealLine, Primary::Reciprocal,
      [mu, p, cfg](cplx z) { return detail::solve_from_above(p, z, height_for(mu, mu, z, cfg), cfg); },
      std::numeric_limits<double>::infinity());
}

Measure circle_subordinate(double a, double b, const Measure& mu) {
  if (mu.support() != Support::UnitCircle)
    throw ParameterError("B_{a,b} on the circle: measure must live on the unit circle");
  if (!(a >= 0)) throw ParameterError("B_{a,b} on the circle: a must be >= 0");
  if (a == 0 && b == 0) return mu;
  const cplx c = std::exp(cplx{-a, b});
  std::ostringstream label;
  label << "B[" << a << "," << b << "](" << mu.label() << ")";
  return detail::closure(label.str(), Support::UnitCircle, Primary::Eta,
                         [mu, c](cplx z) { return mu.eta(c * z) / c; }, 1.0, false);
}

UnivalenceReport univalence_grid_check(const Measure& mu, const Rect& region, int n,
                                       std::size_t max_witnesses) {
  if (n < 3) throw ParameterError("univalence check: n must be >= 3");
  if (!(region.x1 > region.x0 && region.y1 > region.y0))
    throw ParameterError("univalence check: empty region");
  UnivalenceReport report;
  report.n = n;
  const double dx = (region.x1 - region.x0) / (n - 1);
  const double dy = (region.y1 - region.y0) / (n - 1);
  auto node = [&](int i, int j) { return cplx{region.x0 + i * dx, region.y0 + j * dy}; };
  auto inside = [&](cplx w) {
    return w.real() >= region.x0 - 1e-12 && w.real() <= region.x1 + 1e-12 &&
           w.imag() >= region.y0 - 1e-12 && w.imag() <= region.y1 + 1e-12;
  };
  auto F = [&](cplx w) { return mu.reciprocal(w); };

  std::vector<cplx> values(static_cast<std::size_t>(n) * n);
  std::vector<bool> ok(values.size(), false);
  double step = 0.0;  // largest F-distance between grid neighbours
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      try {
        values[k] = F(node(i, j));
        ok[k] = std::isfinite(values[k].real()) && std::isfinite(values[k].imag());
      } catch (const DomainError&) {
        ok[k] = false;
      }
      if (ok[k]) ++report.evaluated;
      else ++report.failed_evaluations;
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const std::size_t k = static_cast<std::size_t>(i) * n + j;
      if (!ok[k]) continue;
      if (i + 1 < n && ok[k + n]) step = std::max(step, std::abs(values[k + n] - values[k]));
      if (j + 1 < n && ok[k + 1]) step = std::max(step, std::abs(values[k + 1] - values[k]));
    }
  if (step == 0.0) return report;

  // Spatial hash of F-values with cells of the neighbour spacing.
  std::map<std::pair<long long, long long>, std::vector<std::size_t>> cells;
  auto cell_of = [&](cplx f) {
    return std::pair{static_cast<long long>(std::floor(f.real() / step)),
                     static_cast<long long>(std::floor(f.imag() / step))};
  };
  for (std::size_t k = 0; k < values.size(); ++k)
    if (ok[k]) cells[cell_of(values[k])].push_back(k);

  const double separation = 0.5 * std::min(dx, dy);
  auto refine = [&](cplx target, cplx seed) -> std::optional<cplx> {
    cplx w = seed;
    for (int it = 0; it < 60; ++it) {
      const double h = 1e-7 * (1.0 + std::abs(w));
      cplx fw, slope;
      try {
        fw = F(w);
        slope = (F(w + h) - F(w - h)) / (2.0 * h);
      } catch (const DomainError&) {
        return std::nullopt;
      }
      if (slope == cplx{}) return std::nullopt;
      const cplx delta = (fw - target) / slope;
      w -= delta;
      if (!inside(w)) return std::nullopt;
      if (std::abs(delta) < 1e-14 * (1.0 + std::abs(w))) break;
    }
    return w;
  };

  for (std::size_t k = 0; k < values.size() && report.witnesses.size() < max_witnesses; ++k) {
    if (!ok[k]) continue;
    const auto [cx, cy] = cell_of(values[k]);
    const int ki = static_cast<int>(k) / n;
    const int kj = static_cast<int>(k) % n;
    for (long long ox = -1; ox <= 1; ++ox)
      for (long long oy = -1; oy <= 1; ++oy) {
        auto it = cells.find({cx + ox, cy + oy});
        if (it == cells.end()) continue;
        for (std::size_t m : it->second) {
          if (m <= k || report.witnesses.size() >= max_witnesses) continue;
          const int mi = static_cast<int>(m) / n;
          const int mj = static_cast<int>(m) % n;
          if (std::abs(mi - ki) <= 1 && std::abs(mj - kj) <= 1) continue;
          if (std::abs(values[m] - values[k]) > step) continue;
          ++report.candidates_refined;
          const cplx wk = node(ki, kj);
          const auto w = refine(values[k], node(mi, mj));
          if (!w || std::abs(*w - wk) <= separation) continue;
          const cplx fw = F(*w);
          if (std::abs(fw - values[k]) < 1e-9)
            report.witnesses.push_back({wk, *w, values[k], fw});
        }
      }
  }
  return report;
}

}  // namespace fpcalc
