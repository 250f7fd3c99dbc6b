#pragma once

#include <vector>

namespace fpcalc {

/// Runtime numerical policy shared by every evaluator.
///
/// `cone_height` <= 0 means "automatic": 10 * (1 + support radius) of the
/// measure being inverted, capped to a finite value for unbounded laws.
struct ToleranceConfig {
  double newton_tol = 1e-12;
  int max_newton_iters = 60;
  int continuation_max_steps = 200;
  std::vector<double> inversion_y_levels{1e-2, 5e-3, 2.5e-3};
  double identity_tol = 1e-8;
  double cone_slope = 1.0;
  double cone_height = 0.0;

  /// Throws ParameterError if any field violates its invariant.
  void validate() const;
};

/// Process-wide defaults. Read-only after startup.
const ToleranceConfig& default_tolerances();

/// Replaces the process-wide defaults. Call before spawning worker threads.
void set_default_tolerances(const ToleranceConfig& cfg);

}  // namespace fpcalc
