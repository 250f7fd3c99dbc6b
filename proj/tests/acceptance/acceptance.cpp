// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fpcalc/checks.hpp"
#include "fpcalc/convolutions.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/subordination.hpp"
#include "fpcalc/transforms.hpp"

using namespace fpcalc;

namespace {

int failures = 0;

void report(int id, const std::string& what, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s [%s]\n", pass ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Runs `body`, turning a thrown exception into an infinite deviation.
double guarded(const std::function<double()>& body, std::string& error) {
  try {
    return body();
  } catch (const std::exception& e) {
    error = e.what();
    return INFINITY;
  }
}

Measure mu_p(double p) {
  if (p == 1.0) return make_atomic({{-1, 0.5}, {1, 0.5}});
  return make_atomic({{-1, p / 2}, {0, 1 - p}, {1, p / 2}});
}

void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto xs = linspace(-5, 5, 101);
  std::string err;
  double generic = INFINITY, closed = INFINITY;
  generic = guarded([&] {
    const GridDensity g = stieltjes_density(add_subordinate(laws::cauchy(0, 2), mu_p(1)), xs);
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst = std::max(worst, std::abs(g.ps()[i] - 2 / (kPi * std::pow(1 + xs[i] * xs[i], 2))));
    return worst;
  }, err);
  closed = guarded([&] {
    const GridDensity g = stieltjes_density(cauchy_subordinate(0, 2, mu_p(1)), xs);
    double worst = 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
      worst = std::max(worst, std::abs(g.ps()[i] - 2 / (kPi * std::pow(1 + xs[i] * xs[i], 2))));
    return worst;
  }, err);
  const double secs = seconds_since(t0);
  report(1, "Student-t density of A_{0,2} on the symmetric Bernoulli law",
         generic <= 1e-6 && closed <= 1e-10 && secs < 5.0,
         "generic " + sci(generic) + " <= 1e-6, closed " + sci(closed) + " <= 1e-10, " +
             sci(secs) + " s < 5 s" + (err.empty() ? "" : ", error: " + err));
}

void criterion2() {
  const auto xs = linspace(-5, 5, 101);
  double worst = 0;
  std::string err;
  for (auto [p, b] : {std::pair{1.0, 2.0}, std::pair{0.5, 3.0}}) {
    worst = std::max(worst, guarded([&, p = p, b = b] {
      const GridDensity g = stieltjes_density(cauchy_subordinate(0, b, mu_p(p)), xs);
      double gap = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x2 = xs[i] * xs[i];
        const double den = x2 * x2 * x2 + 2 * (b * b - 1) * x2 * x2 +
                           (b * b * b * b + 2 * b * b * (1 - 2 * p) + 1) * x2 + p * p * b * b;
        gap = std::max(gap, std::abs(g.ps()[i] - b * p * (x2 + b * b + 1 - p) / (kPi * den)));
      }
      return gap;
    }, err));
  }
  report(2, "rational density family of A_{0,b}(mu_p)", worst <= 1e-8,
         "max gap " + sci(worst) + " <= 1e-8" + (err.empty() ? "" : ", error: " + err));
}

void criterion3() {
  const std::vector<Measure> mus{make_atomic({{-1, 0.5}, {1, 0.5}}),
                                 make_atomic({{-1, 0.2}, {0.5, 0.5}, {3, 0.3}}),
                                 make_atomic({{0, 0.25}, {2, 0.75}})};
  double moment_gap = 0, tail_gap = 0;
  std::string err;
  // Double precision keeps Im F only while |x| stays well below 1e9, so the
  // moments integrate p over [-X, X] and add the x^-4 tails fitted at +-X.
  const double X = 1e4;
  auto integrate = [](const std::function<double(double)>& f, double lo, double hi) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, hi, 20, 1e-13);
  };
  for (const Measure& mu : mus) {
    double m1 = 0, m2 = 0;
    for (const Atom& a : mu.atoms()) {
      m1 += a.weight * a.location;
      m2 += a.weight * a.location * a.location;
    }
    for (auto [a, b] : {std::pair{0.0, 2.0}, std::pair{1.0, 3.0}}) {
      moment_gap = std::max(moment_gap, guarded([&, a = a, b = b] {
        const Measure out = cauchy_subordinate(a, b, mu);
        auto density = [&](double x) { return -out.cauchy({x, 0.0}).imag() / kPi; };
        double q1 = 0, q2 = 0;
        for (auto [lo, hi] : {std::pair{-X, -50.0}, std::pair{-50.0, 50.0}, std::pair{50.0, X}}) {
          q1 += integrate([&](double x) { return x * density(x); }, lo, hi);
          q2 += integrate([&](double x) { return x * x * density(x); }, lo, hi);
        }
        const double c_plus = std::pow(X, 4) * density(X);
        const double c_minus = std::pow(X, 4) * density(-X);
        q1 += (c_plus - c_minus) / (2 * X * X);
        q2 += (c_plus + c_minus) / X;
        return std::max(std::abs(q1 - m1), std::abs(q2 - m2));
      }, err));
    }
  }
  // Tail x^4 p(x) -> b sigma^2 / pi for the symmetric Bernoulli law (sigma^2 = 1), b = 2.
  tail_gap = guarded([&] {
    const Measure out = cauchy_subordinate(0, 2, mus[0]);
    const double x = 100;
    const double tail = std::pow(x, 4) * (-out.cauchy({x, 0.0}).imag() / kPi);
    const double target = 2.0 / kPi;
    return std::abs(tail - target) / target;
  }, err);
  report(3, "A_{a,b} preserves m1, m2; quartic tail constant",
         moment_gap <= 1e-6 && tail_gap <= 0.05,
         "moment gap " + sci(moment_gap) + " <= 1e-6, tail rel. gap " + sci(tail_gap) + " <= 5e-2" +
             (err.empty() ? "" : ", error: " + err));
}

// Criteria 4-8 run the bundled identity suites; every record must meet its own tolerance.
void suite_criterion(int id, const std::string& suite, const std::string& what, double time_limit = INFINITY) {
  std::string detail;
  bool pass = false;
  try {
    const CheckReport r = run_suite(suite);
    double worst = 0;
    std::string failed;
    for (const auto& row : r.results) {
      worst = std::max(worst, row.deviation / row.tolerance);
      if (!row.pass) failed += (failed.empty() ? "" : " ") + row.id;
    }
    pass = r.pass() && r.wall_seconds < time_limit;
    detail = std::to_string(r.results.size()) + " identities, worst deviation/tolerance " + sci(worst) +
             ", " + sci(r.wall_seconds) + " s";
    if (std::isfinite(time_limit)) detail += " < " + sci(time_limit) + " s";
    if (!failed.empty()) detail += ", failing: " + failed;
  } catch (const std::exception& e) {
    detail = std::string("error: ") + e.what();
  }
  report(id, what, pass, detail);
}

void criterion9() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto random_atoms = [&](bool positive) {
    const int n = 2 + static_cast<int>(unit(rng) * 3);
    std::vector<Atom> atoms;
    double total = 0;
    for (int i = 0; i < n; ++i) {
      const double x = positive ? 0.1 + 1.9 * unit(rng) : -2.0 + 4.0 * unit(rng);
      const double w = 0.1 + unit(rng);
      atoms.push_back({x, w});
      total += w;
    }
    for (Atom& a : atoms) a.weight /= total;
    return atoms;
  };
  double worst = 0;
  std::string err;
  int pairs = 0;
  for (ConvolutionKind kind : {ConvolutionKind::AddFree, ConvolutionKind::AddBoolean, ConvolutionKind::AddMonotone,
                               ConvolutionKind::MulFree, ConvolutionKind::MulMonotone}) {
    const bool positive = kind == ConvolutionKind::MulFree || kind == ConvolutionKind::MulMonotone;
    for (int i = 0; i < 20; ++i, ++pairs) {
      const auto a = random_atoms(positive);
      const auto b = random_atoms(positive);
      worst = std::max(worst, guarded([&] {
        const auto series = series_oracle(a, b, kind, 6);
        const Measure m = convolve(kind, make_atomic(a), make_atomic(b));
        const auto contour = moments_by_contour(m, 6, 2.0 * m.radius() + 1.0, 128);
        double gap = 0;
        for (int k = 0; k < 6; ++k)
          gap = std::max(gap, std::abs(contour[k] - series[k]) / std::max(1.0, std::abs(series[k])));
        return gap;
      }, err));
    }
  }
  report(9, "series oracle vs closure-path moments, 20 random atomic pairs per kind", worst <= 1e-6,
         std::to_string(pairs) + " pairs, max rel. gap " + sci(worst) + " <= 1e-6" +
             (err.empty() ? "" : ", error: " + err));
}

void criterion10() {
  const Rect region{-5, 5, 0.1, 5};
  const Measure sym = make_atomic({{-1, 0.5}, {1, 0.5}});
  std::string err;
  std::size_t ui_witnesses = 0, slit_witnesses = 0;
  try {
    ui_witnesses = univalence_grid_check(cauchy_subordinate(0, 2, sym), region, 64).witnesses.size();
    slit_witnesses = univalence_grid_check(cauchy_subordinate(0, 0, sym), region, 64).witnesses.size();
  } catch (const std::exception& e) {
    err = e.what();
  }
  report(10, "injectivity of F on a 64 x 64 grid: A_{0,2} injective, b = 0 not",
         err.empty() && ui_witnesses == 0 && slit_witnesses >= 1,
         std::to_string(ui_witnesses) + " witnesses for b = 2, " + std::to_string(slit_witnesses) +
             " for b = 0" + (err.empty() ? "" : ", error: " + err));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  suite_criterion(4, "belinschi-nica", "Belinschi-Nica map as subordination by sigma_t and power identities");
  suite_criterion(5, "homomorphism", "subordination maps are homomorphisms and compose monotonically");
  suite_criterion(6, "markov", "Markov transform of Boolean and free stable laws; Markov ODE");
  suite_criterion(7, "stable-maps", "M_alpha / U_alpha semigroups and stable-map identities");
  suite_criterion(8, "pde", "PDE residuals: second order for six families, exact for Cauchy", 30.0);
  criterion9();
  criterion10();
  std::printf("%d of 10 criteria failed\n", failures);
  return failures;
}
