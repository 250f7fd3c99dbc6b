#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "fpcalc/branch.hpp"

namespace testing {

using fpcalc::cplx;

inline std::vector<cplx> upper_points() {
  return {{0, 2}, {1, 1.5}, {-2, 3}, {0.5, 5}, {3, 2}, {-1, 1}};
}

inline std::vector<double> negative_axis(int n = 32) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(-5.0 + (5.0 - 0.01) * i / (n - 1));
  return out;
}

template <class Points, class F, class G>
double max_gap(const Points& pts, F&& f, G&& g) {
  double worst = 0;
  for (const auto& z : pts) worst = std::max(worst, std::abs(f(z) - g(z)));
  return worst;
}

}  // namespace testing
