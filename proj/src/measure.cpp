#include "fpcalc/measure.hpp"

#include <cmath>

#include "fpcalc/errors.hpp"

namespace fpcalc {

const char* to_string(Support s) {
  switch (s) {
    case Support::RealLine: return "real-line";
    case Support::PositiveHalfLine: return "positive-halfline";
    case Support::NegativeHalfLine: return "negative-halfline";
    case Support::UnitCircle: return "unit-circle";
  }
  return "?";
}

GridDensity::GridDensity(std::vector<double> xs, std::vector<double> ps, double mass_tol)
    : xs_(std::move(xs)), ps_(std::move(ps)), mass_tol_(mass_tol) {
  if (xs_.size() != ps_.size())
    throw ParameterError("grid density: xs and ps differ in length");
  if (xs_.size() < 2) throw ParameterError("grid density: need at least two points");
  if (!(mass_tol_ > 0)) throw ParameterError("grid density: mass_tol must be positive");
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    if (!std::isfinite(xs_[i]) || !std::isfinite(ps_[i]))
      throw ParameterError("grid density: non-finite sample");
    if (ps_[i] < 0) throw ParameterError("grid density: negative density value");
    if (i > 0 && !(xs_[i] > xs_[i - 1]))
      throw ParameterError("grid density: xs must be strictly increasing");
  }
}

double GridDensity::mass() const { return moment(0); }

double GridDensity::moment(int k) const {
  double acc = 0.0;
  for (std::size_t i = 1; i < xs_.size(); ++i) {
    const double a = std::pow(xs_[i - 1], k) * ps_[i - 1];
    const double b = std::pow(xs_[i], k) * ps_[i];
    acc += 0.5 * (a + b) * (xs_[i] - xs_[i - 1]);
  }
  return acc;
}

void GridDensity::require_unit_mass() const {
  const double m = mass();
  if (std::abs(m - 1.0) > mass_tol_)
    throw ParameterError("grid density: mass " + std::to_string(m) +
                         " differs from 1 by more than " + std::to_string(mass_tol_));
}

Measure::Measure(Data data) : data_(std::make_shared<const Data>(std::move(data))) {}

bool Measure::is_delta_zero() const {
  const auto loc = point_location();
  return loc && *loc == 0.0 && data_->support != Support::UnitCircle;
}

std::optional<double> Measure::point_location() const {
  if (!data_->point_mass) return std::nullopt;
  if (data_->atoms.size() == 1) return data_->atoms.front().location;
  // Closures flagged as point masses carry F(z) = z - a.
  return (cplx{0.0, 1.0} - reciprocal(cplx{0.0, 1.0})).real();
}

cplx Measure::cauchy(cplx z) const {
  if (data_->primary != Primary::Cauchy) return 1.0 / reciprocal(z);
  if (data_->support != Support::UnitCircle && z.imag() < 0)
    return std::conj(data_->evaluator(std::conj(z)));
  return data_->evaluator(z);
}

cplx Measure::reciprocal(cplx z) const {
  if (data_->support != Support::UnitCircle && z.imag() < 0)
    return std::conj(evaluate_reciprocal(std::conj(z)));
  return evaluate_reciprocal(z);
}

cplx Measure::evaluate_reciprocal(cplx z) const {
  switch (data_->primary) {
    case Primary::Cauchy: return 1.0 / data_->evaluator(z);
    case Primary::Reciprocal: return data_->evaluator(z);
    case Primary::Eta: return z * (1.0 - eta(1.0 / z));
  }
  return {};
}

cplx Measure::eta(cplx z) const {
  if (z == cplx{0.0, 0.0}) return {0.0, 0.0};
  if (data_->support != Support::UnitCircle && z.imag() < 0)
    return std::conj(evaluate_eta(std::conj(z)));
  return evaluate_eta(z);
}

cplx Measure::evaluate_eta(cplx z) const {
  if (data_->primary == Primary::Eta) return data_->evaluator(z);
  return 1.0 - z * reciprocal(1.0 / z);
}

double Measure::eta_real(double x) const { return eta(cplx{x, 0.0}).real(); }

double Measure::eta_limit() const {
  if (data_->eta_at_neg_infinity) return *data_->eta_at_neg_infinity;
  if (is_atomic()) {
    double at_zero = 0.0;
    for (const auto& a : data_->atoms)
      if (a.location == 0.0) at_zero += a.weight;
    return at_zero - 1.0;
  }
  return eta_real(-1e8);
}

Measure make_closure(std::string label, Support support, Primary primary,
                     std::function<cplx(cplx)> evaluator, double radius) {
  Measure::Data d;
  d.kind = MeasureKind::Closure;
  d.support = support;
  d.label = std::move(label);
  d.primary = primary;
  d.evaluator = std::move(evaluator);
  d.radius = radius;
  return Measure(std::move(d));
}

}  // namespace fpcalc
