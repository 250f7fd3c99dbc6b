#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fpcalc/branch.hpp"

namespace fpcalc {

enum class Support { RealLine, PositiveHalfLine, NegativeHalfLine, UnitCircle };

const char* to_string(Support s);

/// Point mass. On the unit circle `location` is the angle in [0, 2pi).
struct Atom {
  double location;
  double weight;
};

/// Density samples on a strictly increasing, possibly non-uniform grid.
class GridDensity {
 public:
  GridDensity(std::vector<double> xs, std::vector<double> ps, double mass_tol = 1e-3);

  const std::vector<double>& xs() const { return xs_; }
  const std::vector<double>& ps() const { return ps_; }
  double mass_tol() const { return mass_tol_; }

  /// Trapezoid integral of the samples.
  double mass() const;
  /// Trapezoid integral of x^k p(x).
  double moment(int k) const;
  /// Throws ParameterError if |mass - 1| > mass_tol.
  void require_unit_mass() const;

 private:
  std::vector<double> xs_;
  std::vector<double> ps_;
  double mass_tol_;
};

/// Which transform a measure's evaluator computes natively; the other two
/// are derived through F = 1/G and eta(z) = 1 - z F(1/z).
enum class Primary { Cauchy, Reciprocal, Eta };

enum class MeasureKind { Atomic, Named, Grid, Closure };

/// An immutable probability measure together with the evaluators of its
/// analytic transforms.
///
/// Measures are cheap to copy (shared immutable state) and safe to share
/// between threads. For measures on the real line the evaluators are only
/// asked for points in the closed upper half-plane; lower half-plane values
/// follow from conjugate symmetry.
class Measure {
 public:
  struct Data {
    MeasureKind kind = MeasureKind::Closure;
    Support support = Support::RealLine;
    std::string label;
    std::vector<Atom> atoms;                      // Atomic only
    std::shared_ptr<const GridDensity> grid;      // Grid only
    Primary primary = Primary::Reciprocal;
    std::function<cplx(cplx)> evaluator;
    std::function<double(double)> density;        // closed-form density if known
    double radius = std::numeric_limits<double>::infinity();
    std::optional<double> eta_at_neg_infinity;    // exact value if known
    bool analytic_on_real_axis = false;           // G extends across R
    bool point_mass = false;
  };

  explicit Measure(Data data);

  cplx cauchy(cplx z) const;      // G
  cplx reciprocal(cplx z) const;  // F
  cplx eta(cplx z) const;

  /// eta restricted to the negative half-line, for measures on R+.
  double eta_real(double x) const;

  /// eta(-infinity) for a measure on R+: mu({0}) - 1 for atoms, otherwise
  /// the exact value if known or the value at -1e8.
  double eta_limit() const;

  MeasureKind kind() const { return data_->kind; }
  Support support() const { return data_->support; }
  const std::string& label() const { return data_->label; }
  const std::vector<Atom>& atoms() const { return data_->atoms; }
  bool is_atomic() const { return data_->kind == MeasureKind::Atomic; }
  const GridDensity* grid() const { return data_->grid.get(); }
  const std::function<double(double)>& density() const { return data_->density; }
  double radius() const { return data_->radius; }
  bool analytic_on_real_axis() const { return data_->analytic_on_real_axis; }
  bool is_point_mass() const { return data_->point_mass; }
  /// True for delta_0 (excluded from the multiplicative theory).
  bool is_delta_zero() const;
  /// Location of the point mass, if this is one.
  std::optional<double> point_location() const;

  const Data& data() const { return *data_; }

 private:
  cplx evaluate_reciprocal(cplx z) const;
  cplx evaluate_eta(cplx z) const;

  std::shared_ptr<const Data> data_;
};

/// Builds a closure measure from a single evaluator.
Measure make_closure(std::string label, Support support, Primary primary,
                     std::function<cplx(cplx)> evaluator,
                     double radius = std::numeric_limits<double>::infinity());

}  // namespace fpcalc
