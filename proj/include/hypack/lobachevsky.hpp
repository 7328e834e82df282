#pragma once

namespace hypack {

// Lobachevsky function  L(x) = -Integral_0^x log|2 sin t| dt.
//
// Odd, pi-periodic, maximal at pi/6.  Evaluated to ~1e-14 absolute via the
// zeta series of the smooth part after range reduction to [-pi/2, pi/2]:
//
//   L(x) = x - x log(2x) + sum_{n>=1} zeta(2n) x^(2n+1) / (n (2n+1) pi^(2n))
//
double lobachevsky(double x);

} // namespace hypack
