#include "trifins/scaled.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trifins {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double det3(const Mat3<double>& a) {
  double d = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1));
  d = d - a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0));
  d = d + a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
  return d;
}

}  // namespace

ScaledReal ScaledReal::from(double v) { return from_parts(v, 0.0); }

ScaledReal ScaledReal::from_parts(double mantissa, double log_scale) {
  ScaledReal r;
  if (mantissa == 0 || !std::isfinite(mantissa)) {
    if (!std::isfinite(mantissa)) throw std::domain_error("non-finite mantissa");
    return r;
  }
  double la = std::log(std::abs(mantissa));
  double shift = std::floor(la);
  r.mantissa = (mantissa < 0 ? -1.0 : 1.0) * std::exp(la - shift);
  r.log_scale = log_scale + shift;
  return r;
}

double ScaledReal::log_abs() const {
  if (mantissa == 0) return -kInf;
  return log_scale + std::log(std::abs(mantissa));
}

double ScaledReal::to_double(double shift) const {
  return mantissa * std::exp(log_scale + shift);
}

ScaledReal ScaledReal::operator*(const ScaledReal& o) const {
  if (is_zero() || o.is_zero()) return {};
  return from_parts(mantissa * o.mantissa, log_scale + o.log_scale);
}

ScaledReal ScaledReal::operator/(const ScaledReal& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero ScaledReal");
  if (is_zero()) return {};
  return from_parts(mantissa / o.mantissa, log_scale - o.log_scale);
}

ScaledReal ScaledReal::operator+(const ScaledReal& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const ScaledReal& big = (log_scale >= o.log_scale) ? *this : o;
  const ScaledReal& small = (log_scale >= o.log_scale) ? o : *this;
  double diff = small.log_scale - big.log_scale;
  if (diff < -745.0) return big;  // addend below double underflow
  return from_parts(big.mantissa + small.mantissa * std::exp(diff), big.log_scale);
}

ScaledReal ScaledReal::operator-() const {
  ScaledReal r = *this;
  r.mantissa = -r.mantissa;
  return r;
}

ScaledMat3 ScaledMat3::identity() {
  ScaledMat3 s;
  s.m = Mat3<double>{{1, 0, 0, 0, 1, 0, 0, 0, 1}};
  return s;
}

namespace {

// Rescale so that sup |entry| = 1; folds the factor into log_scale.
ScaledMat3 renormalized(Mat3<double> m, double log_scale, double log_det, int det_sign) {
  double sup = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) sup = std::max(sup, std::abs(m.at(i, j)));
  if (sup == 0) throw std::domain_error("zero matrix has no scaled form");
  if (!std::isfinite(sup)) throw std::domain_error("matrix entries overflowed");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m.at(i, j) /= sup;
  ScaledMat3 s;
  s.m = m;
  s.log_scale = log_scale + std::log(sup);
  s.log_det = log_det;
  s.det_sign = det_sign;
  return s;
}

}  // namespace

ScaledMat3 ScaledMat3::from(const Mat3<double>& dense) {
  double d = det3(dense);
  if (d == 0) throw std::domain_error("singular matrix has no tracked determinant");
  return renormalized(dense, 0.0, std::log(std::abs(d)), d > 0 ? 1 : -1);
}

ScaledMat3 ScaledMat3::times(const Mat3<double>& dense) const {
  double d = det3(dense);
  if (d == 0) throw std::domain_error("singular matrix has no tracked determinant");
  return renormalized(m * dense, log_scale, log_det + std::log(std::abs(d)),
                      det_sign * (d > 0 ? 1 : -1));
}

ScaledMat3 ScaledMat3::times(const ScaledMat3& o) const {
  return renormalized(m * o.m, log_scale + o.log_scale, log_det + o.log_det,
                      det_sign * o.det_sign);
}

Mat3<double> ScaledMat3::reconstruct() const {
  double f = std::exp(log_scale);
  Mat3<double> r = m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r.at(i, j) *= f;
  return r;
}

CubicCoeffs char_poly(const ScaledMat3& s) {
  CubicCoeffs c;
  const Mat3<double>& a = s.m;
  c.c1 = ScaledReal::from_parts(a.trace(), s.log_scale);

  // Second invariant = sum of principal 2x2 minors of the mantissa.  Track the
  // magnitude sum of the six products: if the signed sum sits below the
  // rounding noise of that total, the value is cancellation garbage.
  double sum = 0, mag = 0;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3, k = (i + 2) % 3;
    double p1 = a.at(j, j) * a.at(k, k);
    double p2 = a.at(j, k) * a.at(k, j);
    sum += p1 - p2;
    mag += std::abs(p1) + std::abs(p2);
  }
  double noise = 8 * std::numeric_limits<double>::epsilon() * mag;
  c.c2 = ScaledReal::from_parts(sum, 2 * s.log_scale);
  c.c2_degraded = mag > 0 && std::abs(sum) < 100 * noise;

  c.c3 = ScaledReal::from_parts(s.det_sign, s.log_det);
  return c;
}

namespace {

struct CubicRoots {
  // real parts meaningful only through |.|; flags say which are real
  double r[3];      // |roots| sorted descending
  bool real[3];
  int sign[3];
};

// Roots of x^3 - b1 x^2 + b2 x - b3 with coefficients O(1) after rescaling.
CubicRoots solve_cubic(double b1, double b2, double b3) {
  // depressed cubic: x = u + b1/3 turns it into u^3 + p u + q = 0
  double sh = b1 / 3.0;
  double p = b2 - b1 * b1 / 3.0;
  double q = -2.0 * b1 * b1 * b1 / 27.0 + b1 * b2 / 3.0 - b3;
  double disc = q * q / 4.0 + p * p * p / 27.0;

  double roots[3];
  bool real[3];
  int n_real;
  if (disc <= 0) {
    // three real roots (or borderline): trigonometric form
    double mp = std::max(-p, 0.0);
    double rr = std::sqrt(mp / 3.0);
    double arg = (rr == 0) ? 0.0 : std::clamp(3.0 * q / (2.0 * mp * rr), -1.0, 1.0);
    double phi = std::acos(-arg) / 3.0;
    for (int k = 0; k < 3; ++k) {
      roots[k] = 2.0 * rr * std::cos(phi - 2.0 * M_PI * k / 3.0) + sh;
      real[k] = true;
    }
    n_real = 3;
  } else {
    double sq = std::sqrt(disc);
    double u = std::cbrt(-q / 2.0 + sq);
    double v = std::cbrt(-q / 2.0 - sq);
    roots[0] = u + v + sh;
    real[0] = true;
    // remaining complex pair: product of all roots = b3
    double prod = (roots[0] != 0) ? b3 / roots[0] : 0.0;
    double mag = std::sqrt(std::abs(prod));
    roots[1] = mag;
    roots[2] = mag;
    real[1] = real[2] = false;
    n_real = 1;
  }

  // Newton polish for the real roots (well separated ones converge fast)
  for (int k = 0; k < n_real; ++k) {
    double x = roots[k];
    for (int it = 0; it < 3; ++it) {
      double f = ((x - b1) * x + b2) * x - b3;
      double df = (3.0 * x - 2.0 * b1) * x + b2;
      if (df == 0) break;
      double step = f / df;
      if (!std::isfinite(step)) break;
      x -= step;
    }
    roots[k] = x;
  }

  // package sorted by |root| descending
  int idx[3] = {0, 1, 2};
  std::sort(idx, idx + 3,
            [&](int a, int b) { return std::abs(roots[a]) > std::abs(roots[b]); });
  CubicRoots out;
  for (int k = 0; k < 3; ++k) {
    double r = roots[idx[k]];
    out.r[k] = std::abs(r);
    out.real[k] = real[idx[k]];
    out.sign[k] = real[idx[k]] ? ((r > 0) - (r < 0)) : 0;
  }
  return out;
}

struct TopRoot {
  double log_mag;
  bool real;
  int sign;
};

// log |largest root| of x^3 - c1 x^2 + c2 x - c3, coefficients in scaled form.
// Rescales by the Newton-polygon corner so the top root of the rescaled cubic
// is O(1) even when the coefficients span thousands of orders of magnitude.
TopRoot top_root(const ScaledReal& c1, const ScaledReal& c2, const ScaledReal& c3) {
  double L1 = c1.log_abs(), L2 = c2.log_abs(), L3 = c3.log_abs();
  double tau = std::max({L1, L2 / 2.0, L3 / 3.0});
  if (tau == -kInf) throw std::domain_error("zero cubic");
  double b1 = c1.is_zero() ? 0.0 : c1.to_double(-tau);
  double b2 = c2.is_zero() ? 0.0 : c2.to_double(-2.0 * tau);
  double b3 = c3.is_zero() ? 0.0 : c3.to_double(-3.0 * tau);
  CubicRoots roots = solve_cubic(b1, b2, b3);
  if (roots.r[0] == 0) throw std::domain_error("vanishing top root");
  return {tau + std::log(roots.r[0]), roots.real[0], roots.sign[0]};
}

}  // namespace

LogSpectrum spectrum_from_cubic(const CubicCoeffs& c) {
  if (c.c3.is_zero()) throw std::domain_error("matrix is singular; log eigenvalues undefined");
  double LD = c.c3.log_abs();

  TopRoot top = top_root(c.c1, c.c2, c.c3);
  // reversed polynomial: roots are the reciprocals
  ScaledReal one = ScaledReal::from(1.0);
  TopRoot rev = top_root(c.c2 / c.c3, c.c1 / c.c3, one / c.c3);

  LogSpectrum s;
  s.l[0] = top.log_mag;
  s.l[2] = -rev.log_mag;
  s.l[1] = LD - s.l[0] - s.l[2];
  s.top_real = top.real;
  s.top_sign = top.sign;
  s.bottom_real = rev.real;
  s.bottom_sign = rev.sign;

  if (s.l[1] > s.l[0]) std::swap(s.l[0], s.l[1]);
  if (s.l[2] > s.l[1]) std::swap(s.l[1], s.l[2]);
  if (s.l[1] > s.l[0]) std::swap(s.l[0], s.l[1]);

  // Magnitude clusters: a plain cubic solve leaves sqrt(eps)/cbrt(eps) errors
  // on multiple roots, but symmetric functions give the cluster means exactly.
  const double snap = 3e-5;
  double scale = 1.0 + std::abs(s.l[0]) + std::abs(s.l[2]);
  if (s.l[0] - s.l[2] < snap * scale) {
    s.l[0] = s.l[1] = s.l[2] = LD / 3.0;
  } else if (s.l[0] - s.l[1] < snap * scale) {
    // bottom root isolated and accurate; split the top pair evenly
    double pair = (LD - s.l[2]) / 2.0;
    s.l[0] = s.l[1] = pair;
  } else if (s.l[1] - s.l[2] < snap * scale) {
    double pair = (LD - s.l[0]) / 2.0;
    s.l[1] = s.l[2] = pair;
  }

  s.clustered = (s.l[0] - s.l[1] < 1e-3 * scale) || (s.l[1] - s.l[2] < 1e-3 * scale);
  return s;
}

LogSpectrum log_eigenvalues(const ScaledMat3& m) {
  CubicCoeffs c = char_poly(m);
  if (c.c3.is_zero())
    throw std::domain_error("matrix is singular; log eigenvalues undefined");
  if (c.c2_degraded)
    throw std::domain_error(
        "eigenvalue spread exceeds the float resolution of the mantissa; "
        "compute the spectrum from a structured product instead");
  return spectrum_from_cubic(c);
}

}  // namespace trifins
