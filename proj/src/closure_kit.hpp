#pragma once

// Shared machinery for closures defined implicitly by a subordination-type
// equation. Private to the library.

#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "fpcalc/branch.hpp"
#include "fpcalc/config.hpp"
#include "fpcalc/measure.hpp"

namespace fpcalc::detail {

/// Thread-safe cache keyed by coordinates rounded to 1e-13. Concurrent
/// inserts of the same key write equal values, so the last write wins.
class Memo {
 public:
  template <class Fn>
  cplx get_or(cplx z, Fn&& compute) {
    const Key k{std::round(z.real() * 1e13), std::round(z.imag() * 1e13)};
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(k); it != table_.end()) return it->second;
    }
    const cplx v = compute();
    std::lock_guard lock(mutex_);
    if (table_.size() > kMaxEntries) table_.clear();
    table_[k] = v;
    return v;
  }

 private:
  struct Key {
    double re, im;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<double>{}(k.re) * 1000003u ^ std::hash<double>{}(k.im);
    }
  };
  static constexpr std::size_t kMaxEntries = 1u << 20;
  std::mutex mutex_;
  std::unordered_map<Key, cplx, KeyHash> table_;
};

/// Wraps an evaluator with a fresh Memo.
std::function<cplx(cplx)> memoize(std::function<cplx(cplx)> fn);

/// Residual and read-out of an implicit problem in an unknown u that
/// depends on the query point z.
struct ImplicitProblem {
  std::function<cplx(cplx u, cplx z)> residual;
  std::function<cplx(cplx u, cplx z)> result;
};

/// Multiplicative problems on C \ R+: solved by bracketing on the negative
/// real axis, then continued along the segment from -|z| to z. The unknown
/// lives on (-inf, 0) for real z.
cplx solve_on_slit_plane(const ImplicitProblem& p, cplx z, const ToleranceConfig& cfg);

/// Additive problems on the upper half-plane: continued from z + i*height,
/// seeded with u = z + i*height.
cplx solve_from_above(const ImplicitProblem& p, cplx z, double height,
                      const ToleranceConfig& cfg);

/// Point-mass location when mu is a single atom (including flagged closures).
std::optional<double> point_mass(const Measure& mu);

/// Data for a closure measure, evaluator optionally memoized. Callers set
/// the remaining flags before wrapping it in a Measure.
Measure::Data closure_data(std::string label, Support support, Primary primary,
                           std::function<cplx(cplx)> evaluator, double radius, bool memo = true);

Measure closure(std::string label, Support support, Primary primary,
                std::function<cplx(cplx)> evaluator, double radius, bool memo = true);

}  // namespace fpcalc::detail
