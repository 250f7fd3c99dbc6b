#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpcalc/checks.hpp"
#include "fpcalc/config.hpp"
#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/pde.hpp"
#include "fpcalc/spec.hpp"
#include "fpcalc/transforms.hpp"

using namespace fpcalc;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kIdentityFailure = 1, kInputError = 2, kNumericError = 3 };

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ToleranceConfig load_config(const std::string& path) {
  ToleranceConfig cfg = default_tolerances();
  if (path.empty()) return cfg;
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw SpecError("config file: " + std::string(e.what()));
  }
  if (!j.is_object()) throw SpecError("config file: expected a JSON object");
  for (const auto& [key, v] : j.items()) {
    if (key == "newton_tol") cfg.newton_tol = v.get<double>();
    else if (key == "max_newton_iters") cfg.max_newton_iters = v.get<int>();
    else if (key == "continuation_max_steps") cfg.continuation_max_steps = v.get<int>();
    else if (key == "inversion_y_levels") cfg.inversion_y_levels = v.get<std::vector<double>>();
    else if (key == "identity_tol") cfg.identity_tol = v.get<double>();
    else if (key == "cone_slope") cfg.cone_slope = v.get<double>();
    else if (key == "cone_height") cfg.cone_height = v.get<double>();
    else throw SpecError("config file: unknown field '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

std::optional<std::vector<Atom>> atoms_of_spec(const json& spec) {
  if (spec.value("type", "") == "atomic") {
    std::vector<Atom> out;
    for (const auto& a : spec.at("atoms")) out.push_back({a.at(0).get<double>(), a.at(1).get<double>()});
    return out;
  }
  if (spec.value("type", "") == "named" && spec.value("name", "") == "delta")
    return std::vector<Atom>{{spec.at("params").value("a", 0.0), 1.0}};
  return std::nullopt;
}

void print_moments(const std::vector<double>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) std::cout << (i ? "," : "") << fmt(m[i]);
  std::cout << "\n";
}

// Moments of a finished spec: contour integral around the support.
std::vector<double> moments_of(const json& spec, int n, const ToleranceConfig& cfg) {
  const Measure m = measure_from_spec(spec, cfg);
  if (!std::isfinite(m.radius())) throw DomainError("moments need a compactly supported result");
  return moments_by_contour(m, n, 2.0 * m.radius() + 1.0, 256);
}

void emit(const json& spec, const std::string& what, int n, const ToleranceConfig& cfg) {
  if (what == "moments") {
    print_moments(moments_of(spec, n, cfg));
  } else {
    measure_from_spec(spec, cfg);  // validates the expression before echoing it
    std::cout << spec.dump() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Free, Boolean and monotone convolutions, subordination and identity checks"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON file overriding tolerance settings");

  auto* density = app.add_subcommand("density", "Stieltjes-inversion density on a grid, as CSV");
  std::string d_spec, d_out;
  double xmin = 0, xmax = 0;
  int npts = 0;
  density->add_option("--spec", d_spec, "measure spec: JSON, file or shorthand")->required();
  density->add_option("--xmin", xmin)->required();
  density->add_option("--xmax", xmax)->required();
  density->add_option("--n", npts)->required();
  density->add_option("--out", d_out, "output path (default stdout)");

  auto* conv = app.add_subcommand("conv", "combine two measures");
  std::string c_op, c_lhs, c_rhs, c_emit = "spec";
  int c_n = 4;
  conv->add_option("--op", c_op)->required()->check(
      CLI::IsMember({"add-free", "add-boolean", "add-monotone", "mul-free", "mul-monotone"}));
  conv->add_option("--mu", c_lhs)->required();
  conv->add_option("--nu", c_rhs)->required();
  conv->add_option("--emit", c_emit)->check(CLI::IsMember({"spec", "moments"}));
  conv->add_option("--moments", c_n, "number of moments for --emit moments")->check(CLI::Range(1, 12));

  auto* sub = app.add_subcommand("subordinate", "subordination maps");
  std::string s_kind, s_mu, s_sigma, s_emit = "spec";
  double s_a = 0, s_b = 0, s_t = 0;
  int s_n = 4;
  sub->add_option("--kind", s_kind)->required()->check(CLI::IsMember(
      {"mult", "add", "cauchy", "circle", "belinschi-nica", "bp-mult", "bp-add"}));
  sub->add_option("--mu", s_mu)->required();
  sub->add_option("--sigma", s_sigma, "subordinating measure for mult/add");
  sub->add_option("--a", s_a);
  sub->add_option("--b", s_b);
  sub->add_option("--t", s_t);
  sub->add_option("--emit", s_emit)->check(CLI::IsMember({"spec", "moments"}));
  sub->add_option("--moments", s_n)->check(CLI::Range(1, 12));

  auto* check = app.add_subcommand("check", "run an identity suite");
  std::string k_suite;
  std::optional<double> k_tol;
  bool k_json = false;
  check->add_option("--suite", k_suite)->required();
  check->add_option("--tol", k_tol, "override every identity tolerance");
  check->add_flag("--json", k_json, "print the JSON report instead of the table");

  auto* pde = app.add_subcommand("pde-residual", "finite-difference PDE residual, as CSV");
  pde->set_help_flag("--help", "Print this help message and exit");
  std::string p_family, p_mu, p_z;
  double p_t = 1, p_h = 1e-2, p_a = 0, p_b = 0;
  pde->add_option("--family", p_family)->required();
  pde->add_option("--mu", p_mu)->required();
  pde->add_option("--t", p_t)->required();
  pde->add_option("--z", p_z, "re,im")->required();
  pde->add_option("--h", p_h)->required();
  pde->add_option("--a", p_a, "Cauchy family drift");
  pde->add_option("--b", p_b, "Cauchy family scale");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  try {
    const ToleranceConfig cfg = load_config(config_path);
    set_default_tolerances(cfg);

    if (*density) {
      if (!(xmin < xmax) || npts < 2) throw ParameterError("density: need xmin < xmax and n >= 2");
      const Measure mu = measure_from_spec(spec_from_argument(d_spec), cfg);
      const GridDensity g = stieltjes_density(mu, linspace(xmin, xmax, npts), cfg);
      if (d_out.empty()) {
        write_density_csv(std::cout, g);
      } else {
        std::ofstream out(d_out);
        if (!out) throw SpecError("cannot write '" + d_out + "'");
        write_density_csv(out, g);
      }
      return kPass;
    }

    if (*conv) {
      const json lhs = spec_from_argument(c_lhs);
      const json rhs = spec_from_argument(c_rhs);
      const json combined = combine_specs(c_op, lhs, rhs);
      const auto a = atoms_of_spec(lhs);
      const auto b = atoms_of_spec(rhs);
      if (c_emit == "moments" && a && b) {
        print_moments(series_oracle(*a, *b, parse_convolution_kind(c_op), c_n));
      } else {
        emit(combined, c_emit, c_n, cfg);
      }
      return kPass;
    }

    if (*sub) {
      const json mu = spec_from_argument(s_mu);
      json spec;
      auto need_sigma = [&] {
        if (s_sigma.empty()) throw SpecError("subordinate --kind " + s_kind + " needs --sigma");
        return spec_from_argument(s_sigma);
      };
      auto is_point = [](const json& s, double at) {
        const auto atoms = atoms_of_spec(s);
        return atoms && atoms->size() == 1 && (*atoms)[0].location == at;
      };
      if (s_kind == "mult" || s_kind == "add") {
        const json sigma = need_sigma();
        // B over delta_1 and A over delta_0 are the identity.
        if (is_point(sigma, s_kind == "mult" ? 1.0 : 0.0)) spec = mu;
        else spec = {{"type", "expr"}, {"op", s_kind + "-subordinate"}, {"args", {sigma, mu}}};
      } else if (s_kind == "cauchy" || s_kind == "circle") {
        spec = {{"type", "expr"}, {"op", s_kind + "-subordinate"}, {"args", {mu}},
                {"params", {{"a", s_a}, {"b", s_b}}}};
      } else if (s_kind == "belinschi-nica") {
        spec = {{"type", "expr"}, {"op", "belinschi-nica"}, {"args", {mu}}, {"params", {{"t", s_t}}}};
      } else {
        spec = {{"type", "expr"}, {"op", s_kind}, {"args", {mu}}};
      }
      emit(spec, s_emit, s_n, cfg);
      return kPass;
    }

    if (*check) {
      const CheckReport report = run_suite(k_suite, k_tol, cfg);
      if (k_json) std::cout << report.to_json().dump(2) << "\n";
      else report.print_table(std::cout);
      return report.pass() ? kPass : kIdentityFailure;
    }

    if (*pde) {
      const auto comma = p_z.find(',');
      if (comma == std::string::npos) throw SpecError("--z expects re,im");
      double re = 0, im = 0;
      try {
        re = std::stod(p_z.substr(0, comma));
        im = std::stod(p_z.substr(comma + 1));
      } catch (const std::exception&) {
        throw SpecError("--z expects re,im");
      }
      const FamilySpec fam = parse_family(p_family, p_a, p_b);
      const Measure mu = measure_from_spec(spec_from_argument(p_mu), cfg);
      const ConvergenceStudy s = pde_convergence(mu, fam, p_t, {re, im}, p_h, cfg);
      std::cout << "family,t,z_re,z_im,h,residual_h,residual_h_over_2,ratio,order\n"
                << p_family << ',' << fmt(p_t) << ',' << fmt(re) << ',' << fmt(im) << ','
                << fmt(p_h) << ',' << fmt(std::abs(s.residual_h)) << ','
                << fmt(std::abs(s.residual_half)) << ',' << fmt(s.ratio) << ',' << fmt(s.order)
                << "\n";
      return kPass;
    }
  } catch (const SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParameterError& e) {
    std::cerr << "parameter error: " << e.what() << "\n";
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kNumericError;
  } catch (const std::exception& e) {
    std::cerr << "numeric error: " << e.what() << "\n";
    return kNumericError;
  }
  return kPass;
}
