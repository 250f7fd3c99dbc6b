#include "fpcalc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <limits>

#include "fpcalc/errors.hpp"
#include "fpcalc/measure.hpp"
#include "fpcalc/parallel.hpp"
#include "fpcalc/pde.hpp"
#include "fpcalc/solvers.hpp"
#include "fpcalc/spec.hpp"
#include "fpcalc/stable_maps.hpp"
#include "fpcalc/transforms.hpp"
#include "manifest_data.hpp"

namespace fpcalc {

using nlohmann::json;

namespace {

std::vector<cplx> grid_points(const json& grid) {
  const std::string type = grid.at("type").get<std::string>();
  std::vector<cplx> pts;
  if (type == "real") {
    for (double x : linspace(grid.at("from"), grid.at("to"), grid.at("n"))) pts.emplace_back(x, 0.0);
  } else if (type == "rect") {
    const auto xs = linspace(grid.at("x")[0], grid.at("x")[1], grid.at("n"));
    const auto ys = linspace(grid.at("y")[0], grid.at("y")[1], grid.at("n"));
    for (double x : xs)
      for (double y : ys) pts.emplace_back(x, y);
  } else if (type == "points") {
    for (const auto& p : grid.at("points")) pts.emplace_back(p.at(0).get<double>(), p.at(1).get<double>());
  } else {
    throw SpecError("manifest: unknown grid type '" + type + "'");
  }
  return pts;
}

cplx transform_at(const Measure& m, const std::string& transform, cplx z) {
  if (transform == "eta") return m.eta(z);
  if (transform == "F") return m.reciprocal(z);
  if (transform == "G") return m.cauchy(z);
  if (transform == "sigma") return eval_sigma(m, z.real());
  throw SpecError("manifest: unknown transform '" + transform + "'");
}

double mixed_gap(cplx lhs, cplx rhs) { return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)); }

cplx point(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

}  // namespace

bool CheckReport::pass() const {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

json CheckReport::to_json() const {
  json out = {{"suite", suite}, {"pass", pass()}, {"wall_seconds", wall_seconds}};
  json rows = json::array();
  for (const auto& r : results) {
    json row = {{"id", r.id}, {"description", r.description}, {"deviation", r.deviation},
                {"tolerance", r.tolerance}, {"pass", r.pass}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(row);
  }
  out["identities"] = rows;
  return out;
}

void CheckReport::print_table(std::ostream& out) const {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "suite " << suite << "\n";
  std::size_t width = 2;
  for (const auto& r : results) width = std::max(width, r.id.size());
  for (const auto& r : results) {
    out << "  " << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(static_cast<int>(width))
        << r.id << std::right << "  dev=" << std::setprecision(3) << std::scientific
        << r.deviation << "  tol=" << r.tolerance;
    if (!r.error.empty()) out << "  error: " << r.error;
    out << "\n";
  }
  out << std::defaultfloat << std::setprecision(4) << "  " << (pass() ? "PASS" : "FAIL") << " ("
      << results.size() << " identities, " << wall_seconds << " s)\n";
  out.flags(flags);
  out.precision(precision);
}

const json& identity_manifest() {
  static const json manifest = json::parse(detail::kIdentityManifest);
  return manifest;
}

std::vector<std::string> known_suites() {
  return {"belinschi-nica", "homomorphism", "markov", "stable-maps", "cauchy", "pde"};
}

IdentityResult run_identity(const json& record, std::optional<double> tol_override,
                            const ToleranceConfig& cfg) {
  IdentityResult r;
  r.id = record.at("id").get<std::string>();
  r.description = record.value("description", "");
  const std::string kind = record.value("kind", "identity");
  try {
    if (kind == "identity") {
      r.tolerance = tol_override.value_or(record.value("tol", cfg.identity_tol));
      const Measure lhs = measure_from_spec(record.at("lhs"), cfg);
      const Measure rhs = measure_from_spec(record.at("rhs"), cfg);
      const std::string transform = record.value("transform", "eta");
      for (cplx z : grid_points(record.at("grid")))
        r.deviation = std::max(r.deviation, mixed_gap(transform_at(lhs, transform, z),
                                                      transform_at(rhs, transform, z)));
      r.pass = r.deviation <= r.tolerance;
    } else if (kind == "markov-ode") {
      // |G_M' + G_nu G_M| relative to |G_M|.
      r.tolerance = tol_override.value_or(record.value("tol", cfg.identity_tol));
      const Measure nu = measure_from_spec(record.at("nu"), cfg);
      const Measure m = markov_transform(nu);
      for (cplx z : grid_points(record.at("grid"))) {
        const cplx gm = m.cauchy(z);
        const cplx dgm = derivative([&](cplx w) { return m.cauchy(w); }, z);
        r.deviation = std::max(r.deviation, std::abs(dgm + nu.cauchy(z) * gm) / std::abs(gm));
      }
      r.pass = r.deviation <= r.tolerance;
    } else if (kind == "pde-convergence" || kind == "pde-exact") {
      const FamilySpec fam = parse_family(record.at("family").get<std::string>(),
                                          record.value("a", 0.0), record.value("b", 0.0));
      const Measure mu = measure_from_spec(record.at("mu"), cfg);
      const double t = record.at("t");
      const double h = record.at("h");
      const cplx z = point(record.at("z"));
      if (kind == "pde-exact") {
        r.tolerance = tol_override.value_or(record.value("tol", 1e-10));
        r.deviation = std::abs(pde_residual(mu, fam, t, z, h, cfg));
        r.pass = r.deviation <= r.tolerance;
      } else {
        const double lo = record.value("min", 1.7);
        const double hi = record.value("max", 2.3);
        const ConvergenceStudy s = pde_convergence(mu, fam, t, z, h, cfg);
        // Reported as the distance of the observed order from 2.
        r.deviation = std::abs(s.order - 2.0);
        r.tolerance = std::min(2.0 - lo, hi - 2.0);
        r.pass = s.order >= lo && s.order <= hi;
        if (r.description.empty()) r.description = "order " + std::to_string(s.order);
      }
    } else {
      throw SpecError("manifest: unknown record kind '" + kind + "'");
    }
  } catch (const std::exception& e) {
    r.pass = false;
    r.error = e.what();
    r.deviation = std::numeric_limits<double>::infinity();
  }
  return r;
}

CheckReport run_suite(const std::string& suite, std::optional<double> tol_override,
                      const ToleranceConfig& cfg) {
  const auto suites = known_suites();
  if (std::find(suites.begin(), suites.end(), suite) == suites.end())
    throw SpecError("unknown suite '" + suite + "'");
  const auto start = std::chrono::steady_clock::now();
  std::vector<const json*> records;
  for (const auto& rec : identity_manifest().at("identities"))
    if (rec.at("suite").get<std::string>() == suite) records.push_back(&rec);
  CheckReport report;
  report.suite = suite;
  report.results.resize(records.size());
  parallel_for(records.size(), [&](std::size_t i) {
    report.results[i] = run_identity(*records[i], tol_override, cfg);
  });
  std::sort(report.results.begin(), report.results.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace fpcalc
