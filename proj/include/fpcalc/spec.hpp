#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc {

/// Builds a measure from its JSON spec. Accepted forms:
///   {"type": "atomic", "atoms": [[x, w], ...]}
///   {"type": "circle-atomic", "atoms": [[theta, w], ...]}
///   {"type": "named", "name": "cauchy", "params": {"a": 0, "b": 2}}
///   {"type": "grid", "xs": [...], "ps": [...], "mass_tol": 1e-3}
///   {"type": "expr", "op": "add-free", "args": [spec, spec], "params": {...}}
/// Malformed specs raise SpecError; invalid values raise ParameterError.
Measure measure_from_spec(const nlohmann::json& spec,
                          const ToleranceConfig& cfg = default_tolerances());

/// Command-line form: inline JSON, a path to a JSON file, or the shorthand
/// `name[:k=v,...]`, `delta_<a>` or `atoms:x@w,x@w,...`.
nlohmann::json spec_from_argument(std::string_view arg);

/// Canonical spec for `op` applied to the given argument specs, simplified
/// to a closed form where one exists (point masses, Cauchy laws under
/// additive operations).
nlohmann::json combine_specs(std::string_view op, const nlohmann::json& lhs,
                             const nlohmann::json& rhs, const nlohmann::json& params = {});

}  // namespace fpcalc
