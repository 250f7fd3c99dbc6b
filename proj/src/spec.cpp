#include "fpcalc/spec.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "fpcalc/convolutions.hpp"
#include "fpcalc/errors.hpp"
#include "fpcalc/measures.hpp"
#include "fpcalc/stable_maps.hpp"
#include "fpcalc/subordination.hpp"

namespace fpcalc {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(); }

const json& field(const json& spec, const char* key) {
  if (!spec.is_object() || !spec.contains(key))
    throw SpecError(std::string("measure spec: missing '") + key + "' in " + dump(spec));
  return spec.at(key);
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) throw SpecError(where + ": expected a number, got " + dump(j));
  return j.get<double>();
}

double param(const json& spec, const char* key) {
  if (!spec.contains("params") || !spec["params"].is_object() || !spec["params"].contains(key))
    throw SpecError(std::string("measure spec: op '") + spec.value("op", "?") +
                    "' needs parameter '" + key + "'");
  return number(spec["params"][key], std::string("parameter '") + key + "'");
}

std::vector<Atom> atoms_of(const json& spec) {
  const json& list = field(spec, "atoms");
  if (!list.is_array() || list.empty()) throw SpecError("measure spec: 'atoms' must be a non-empty array");
  std::vector<Atom> atoms;
  for (const auto& a : list) {
    if (!a.is_array() || a.size() != 2) throw SpecError("measure spec: each atom is [location, weight]");
    atoms.push_back({number(a[0], "atom location"), number(a[1], "atom weight")});
  }
  return atoms;
}

std::vector<double> numbers(const json& j, const char* what) {
  if (!j.is_array()) throw SpecError(std::string("measure spec: '") + what + "' must be an array");
  std::vector<double> out;
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

Measure from_expr(const json& spec, const ToleranceConfig& cfg) {
  const json& op_json = field(spec, "op");
  if (!op_json.is_string()) throw SpecError("measure spec: 'op' must be a string");
  const std::string op = op_json.get<std::string>();
  const json& args_json = field(spec, "args");
  if (!args_json.is_array()) throw SpecError("measure spec: 'args' must be an array");
  std::vector<Measure> args;
  for (const auto& a : args_json) args.push_back(measure_from_spec(a, cfg));
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw SpecError("measure spec: op '" + op + "' takes " + std::to_string(n) + " argument(s)");
  };

  if (op == "add-free" || op == "add-boolean" || op == "add-monotone" || op == "mul-free" ||
      op == "mul-monotone") {
    need(2);
    return convolve(parse_convolution_kind(op), args[0], args[1], cfg);
  }
  if (op == "mult-subordinate") { need(2); return mult_subordinate(args[0], args[1], cfg); }
  if (op == "add-subordinate") { need(2); return add_subordinate(args[0], args[1], cfg); }
  need(1);
  const Measure& mu = args[0];
  if (op == "free-power") return free_power(mu, param(spec, "t"), cfg);
  if (op == "boolean-power") return boolean_power(mu, param(spec, "s"));
  if (op == "mul-free-power") return mul_free_power(mu, param(spec, "t"), cfg);
  if (op == "dilate") return dilate(param(spec, "a"), mu);
  if (op == "power-pushforward") return power_pushforward(param(spec, "p"), mu);
  if (op == "belinschi-nica") return belinschi_nica(param(spec, "t"), mu, cfg);
  if (op == "cauchy-subordinate") return cauchy_subordinate(param(spec, "a"), param(spec, "b"), mu);
  if (op == "circle-subordinate") return circle_subordinate(param(spec, "a"), param(spec, "b"), mu);
  if (op == "bp-mult") return bp_map_mult(mu, cfg);
  if (op == "bp-add") return bp_map_add(mu, cfg);
  if (op == "m-alpha-plus") return m_alpha_plus(param(spec, "alpha"), mu);
  if (op == "m-alpha-minus") return m_alpha_minus(param(spec, "alpha"), mu);
  if (op == "u-alpha-plus") return u_alpha_plus(param(spec, "alpha"), mu);
  if (op == "markov") return markov_transform(mu);
  if (op == "inverse-markov") return inverse_markov(mu);
  if (op == "boolean-mixture") return boolean_mixture(mu, param(spec, "alpha"));
  throw SpecError("measure spec: unknown op '" + op + "'");
}

// Point-mass location of a spec, if it obviously is one.
std::optional<double> spec_point(const json& s) {
  if (!s.is_object()) return std::nullopt;
  const std::string type = s.value("type", "");
  if (type == "atomic" && s.contains("atoms") && s["atoms"].size() == 1)
    return s["atoms"][0][0].get<double>();
  if (type == "named") {
    const std::string name = s.value("name", "");
    const json params = s.value("params", json::object());
    if (name == "delta") return params.value("a", 0.0);
    if (name == "cauchy" && params.value("b", 0.0) == 0.0) return params.value("a", 0.0);
  }
  return std::nullopt;
}

std::optional<std::pair<double, double>> spec_cauchy(const json& s) {
  if (auto p = spec_point(s)) return std::pair{*p, 0.0};
  if (s.is_object() && s.value("type", "") == "named" && s.value("name", "") == "cauchy") {
    const json params = s.value("params", json::object());
    return std::pair{params.value("a", 0.0), params.value("b", 0.0)};
  }
  return std::nullopt;
}

json named(const std::string& name, json params) {
  return {{"type", "named"}, {"name", name}, {"params", std::move(params)}};
}

}  // namespace

Measure measure_from_spec(const json& spec, const ToleranceConfig& cfg) {
  const json& type_json = field(spec, "type");
  if (!type_json.is_string()) throw SpecError("measure spec: 'type' must be a string");
  const std::string type = type_json.get<std::string>();
  if (type == "atomic") return make_atomic(atoms_of(spec));
  if (type == "circle-atomic") return make_circle_atomic(atoms_of(spec));
  if (type == "named") {
    const json& name = field(spec, "name");
    if (!name.is_string()) throw SpecError("measure spec: 'name' must be a string");
    LawParams params;
    if (spec.contains("params")) {
      if (!spec["params"].is_object()) throw SpecError("measure spec: 'params' must be an object");
      for (const auto& [k, v] : spec["params"].items()) params[k] = number(v, "parameter '" + k + "'");
    }
    return make_named(name.get<std::string>(), params);
  }
  if (type == "grid") {
    const double tol = spec.contains("mass_tol") ? number(spec["mass_tol"], "mass_tol") : 1e-3;
    return make_grid(GridDensity(numbers(field(spec, "xs"), "xs"), numbers(field(spec, "ps"), "ps"), tol));
  }
  if (type == "expr") return from_expr(spec, cfg);
  throw SpecError("measure spec: unknown type '" + type + "'");
}

json spec_from_argument(std::string_view arg) {
  std::string s(arg);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) throw SpecError("empty measure argument");
  if (s.front() == '{') {
    try {
      return json::parse(s);
    } catch (const json::parse_error& e) {
      throw SpecError(std::string("measure spec: invalid JSON: ") + e.what());
    }
  }
  if (std::ifstream file{s}) {
    try {
      return json::parse(file);
    } catch (const json::parse_error& e) {
      throw SpecError("measure spec file '" + s + "': " + e.what());
    }
  }
  auto to_number = [&](const std::string& text) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != text.size() || text.empty())
      throw SpecError("measure shorthand '" + s + "': '" + text + "' is not a number");
    return v;
  };
  const auto colon = s.find(':');
  const std::string name = s.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : s.substr(colon + 1);
  std::vector<std::string> items;
  if (!rest.empty()) {
    std::stringstream ss(rest);
    for (std::string item; std::getline(ss, item, ',');) items.push_back(item);
  }
  if (name == "atoms") {
    json atoms = json::array();
    for (const auto& item : items) {
      const auto at = item.find('@');
      if (at == std::string::npos) throw SpecError("atoms shorthand: expected x@w, got '" + item + "'");
      atoms.push_back({to_number(item.substr(0, at)), to_number(item.substr(at + 1))});
    }
    return {{"type", "atomic"}, {"atoms", atoms}};
  }
  if (name.rfind("delta_", 0) == 0 && colon == std::string::npos)
    return named("delta", {{"a", to_number(name.substr(6))}});
  json params = json::object();
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw SpecError("measure shorthand: expected k=v, got '" + item + "'");
    params[item.substr(0, eq)] = to_number(item.substr(eq + 1));
  }
  for (char c : name)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_'))
      throw SpecError("measure argument '" + s + "' is neither JSON, a file, nor a law name");
  return named(name, params);
}

json combine_specs(std::string_view op_view, const json& lhs, const json& rhs, const json& params) {
  const std::string op(op_view);
  const auto a = spec_point(lhs);
  const auto b = spec_point(rhs);
  const bool additive = op == "add-free" || op == "add-boolean" || op == "add-monotone";
  const bool multiplicative = op == "mul-free" || op == "mul-monotone";
  if (a && b && additive) return named("delta", {{"a", *a + *b}});
  if (a && b && multiplicative) return named("delta", {{"a", *a * *b}});
  if (additive) {
    const auto c1 = spec_cauchy(lhs);
    const auto c2 = spec_cauchy(rhs);
    if (c1 && c2 && (c1->second > 0 || c2->second > 0))
      return named("cauchy", {{"a", c1->first + c2->first}, {"b", c1->second + c2->second}});
  }
  json out = {{"type", "expr"}, {"op", op}, {"args", rhs.is_null() ? json::array({lhs}) : json::array({lhs, rhs})}};
  if (params.is_object() && !params.empty()) out["params"] = params;
  return out;
}

}  // namespace fpcalc
