#include "fpcalc/branch.hpp"

#include <cmath>

#include "fpcalc/config.hpp"
#include "fpcalc/errors.hpp"

namespace fpcalc {

namespace {

cplx upper_limit(cplx z) {
  if (z.imag() == 0.0) return {z.real(), 0.0};
  return z;
}

ToleranceConfig& mutable_defaults() {
  static ToleranceConfig cfg;
  return cfg;
}

}  // namespace

cplx principal_log(cplx z) { return std::log(upper_limit(z)); }

cplx principal_pow(cplx z, double p) {
  if (z == cplx{0.0, 0.0}) return p > 0 ? cplx{0.0, 0.0} : cplx{INFINITY, 0.0};
  return std::exp(p * principal_log(z));
}

cplx principal_sqrt(cplx z) { return std::sqrt(upper_limit(z)); }

void ToleranceConfig::validate() const {
  if (!(newton_tol > 0) || max_newton_iters <= 0 || continuation_max_steps <= 0 ||
      !(identity_tol > 0) || !(cone_slope > 0) || cone_height < 0)
    throw ParameterError("tolerance config: all fields must be positive");
  if (inversion_y_levels.empty())
    throw ParameterError("tolerance config: inversion_y_levels is empty");
  for (std::size_t i = 0; i < inversion_y_levels.size(); ++i) {
    if (!(inversion_y_levels[i] > 0))
      throw ParameterError("tolerance config: y levels must be positive");
    if (i > 0 && !(inversion_y_levels[i] < inversion_y_levels[i - 1]))
      throw ParameterError("tolerance config: y levels must be strictly decreasing");
  }
}

const ToleranceConfig& default_tolerances() { return mutable_defaults(); }

void set_default_tolerances(const ToleranceConfig& cfg) {
  cfg.validate();
  mutable_defaults() = cfg;
}

}  // namespace fpcalc
