#pragma once

#include <complex>

namespace fpcalc {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

// Principal branches on C \ (-inf, 0]. On the cut itself the value is the
// boundary limit from the upper half-plane (a signed -0 imaginary part is
// normalised to +0 first), so real-axis evaluations are deterministic.

cplx principal_log(cplx z);
cplx principal_pow(cplx z, double p);
cplx principal_sqrt(cplx z);

}  // namespace fpcalc
