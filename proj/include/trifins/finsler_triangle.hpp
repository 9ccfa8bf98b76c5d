#pragma once

#include <complex>

namespace trifins {

// Value of the cubic differential in a fixed local coordinate (zero allowed:
// it marks the degenerate locus, where the gauge collapses).
using CubicValue = std::complex<double>;

// Triangular gauge of a tangent value v at a point with cubic value mu:
// the maximum over the three cube roots alpha of mu of 2 Re(alpha * v).
// Zero when mu = 0.  The unit ball is an equilateral triangle whose
// orientation rotates with arg(mu)/3.
double finsler_delta_eval(CubicValue mu, std::complex<double> v);

}  // namespace trifins
