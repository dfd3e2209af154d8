#pragma once

#include <cmath>
#include <complex>

namespace nct {

using cplx = std::complex<double>;

// e^{i*pi*t} with exact values at integer and half-integer t.
//
// All twist phases in this library are rational or real multiples of pi,
// so every call site passes the exponent in units of pi. Reduction uses
// std::remainder (exact per IEEE-754), which makes lattice phases such as
// e^{-i*pi*0.5} = -i and deck phases e^{2*pi*i*m} = 1 land on exact
// doubles instead of values 1 ulp off. Identities that are exact in exact
// arithmetic then stay exact in double arithmetic.
inline cplx unit_phase(double t) {
  double r = std::remainder(t, 2.0);  // r in [-1, 1], exact
  if (r == 0.0) return {1.0, 0.0};
  if (r == 1.0 || r == -1.0) return {-1.0, 0.0};
  if (r == 0.5) return {0.0, 1.0};
  if (r == -0.5) return {0.0, -1.0};
  // fold to |r| <= 1/2 so cos/sin see small arguments
  double sign = 1.0;
  if (r > 0.5) {
    r -= 1.0;
    sign = -1.0;
  } else if (r < -0.5) {
    r += 1.0;
    sign = -1.0;
  }
  const double a = M_PI * r;
  return {sign * std::cos(a), sign * std::sin(a)};
}

}  // namespace nct
