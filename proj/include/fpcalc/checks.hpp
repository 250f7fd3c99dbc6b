#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpcalc/config.hpp"

namespace fpcalc {

struct IdentityResult {
  std::string id;
  std::string description;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string error;  // set when evaluation failed outright
};

struct CheckReport {
  std::string suite;
  std::vector<IdentityResult> results;  // ordered by id
  double wall_seconds = 0.0;

  bool pass() const;
  nlohmann::json to_json() const;
  void print_table(std::ostream& out) const;
};

/// The bundled identity manifest.
const nlohmann::json& identity_manifest();

std::vector<std::string> known_suites();

/// Runs one manifest record. Identity deviations are
/// max |lhs - rhs| / max(1, |rhs|) over the record's grid.
IdentityResult run_identity(const nlohmann::json& record, std::optional<double> tol_override,
                            const ToleranceConfig& cfg = default_tolerances());

/// Runs every record of `suite` in parallel. Unknown suites raise SpecError.
/// `tol_override` replaces per-record tolerances of identity records.
CheckReport run_suite(const std::string& suite, std::optional<double> tol_override = std::nullopt,
                      const ToleranceConfig& cfg = default_tolerances());

}  // namespace fpcalc
