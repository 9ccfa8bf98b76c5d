#include "trifins/finsler_triangle.hpp"

#include <algorithm>
#include <cmath>

namespace trifins {

double finsler_delta_eval(CubicValue mu, std::complex<double> v) {
  if (mu == CubicValue(0.0)) return 0.0;
  double r = std::cbrt(std::abs(mu));
  double theta = std::arg(mu) / 3.0;
  double best = 0.0;
  for (int k = 0; k < 3; ++k) {
    std::complex<double> alpha = std::polar(r, theta + 2.0 * M_PI * k / 3.0);
    best = std::max(best, 2.0 * (alpha * v).real());
  }
  // The three candidate values sum to zero, so the maximum is nonnegative
  // already; the initialization at 0 only guards rounding at v = 0.
  return best;
}

}  // namespace trifins
