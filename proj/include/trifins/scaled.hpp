#pragma once

#include <array>

#include "trifins/mat3.hpp"

namespace trifins {

// value = mantissa * exp(log_scale); mantissa is 0 or has |mantissa| in [1, e).
// Keeps products of matrices with entries like t^degree representable far
// beyond double range.
struct ScaledReal {
  double mantissa = 0;
  double log_scale = 0;

  static ScaledReal from(double v);
  static ScaledReal from_parts(double mantissa, double log_scale);

  bool is_zero() const { return mantissa == 0; }
  double log_abs() const;  // -inf for zero
  int sign() const { return (mantissa > 0) - (mantissa < 0); }
  // mantissa * exp(log_scale + shift) as a double; may over/underflow.
  double to_double(double shift = 0) const;

  ScaledReal operator*(const ScaledReal& o) const;
  ScaledReal operator/(const ScaledReal& o) const;
  ScaledReal operator+(const ScaledReal& o) const;
  ScaledReal operator-() const;
};

// 3x3 float matrix with a separate log scale: true matrix = exp(log_scale) * m,
// kept with sup-norm(m) = 1 after every multiplication.  The determinant of
// the true matrix is tracked multiplicatively on the side: the determinant of
// a long product cancels far below float resolution of the mantissa, so it
// cannot be recovered from the mantissa afterwards.
struct ScaledMat3 {
  Mat3<double> m{};
  double log_scale = 0;
  double log_det = 0;  // log |det| of the true matrix
  int det_sign = 1;

  static ScaledMat3 identity();
  static ScaledMat3 from(const Mat3<double>& dense);

  ScaledMat3 times(const Mat3<double>& dense) const;
  ScaledMat3 times(const ScaledMat3& o) const;
  // exp(log_scale) * m as a plain matrix; valid while it fits in doubles.
  Mat3<double> reconstruct() const;
};

// Characteristic polynomial lambda^3 - c1 lambda^2 + c2 lambda - c3 of the
// true matrix, coefficients in scaled form.  c2 comes from 2x2 minors of the
// mantissa and is flagged when rounding noise swamps the cancellation.
struct CubicCoeffs {
  ScaledReal c1, c2, c3;
  bool c2_degraded = false;
};
CubicCoeffs char_poly(const ScaledMat3& m);

// Logs of the absolute values of the three eigenvalues, sorted descending,
// plus reality/sign information for the extreme ones.
struct LogSpectrum {
  std::array<double, 3> l{};  // l[0] >= l[1] >= l[2]
  bool top_real = false;
  int top_sign = 0;
  bool bottom_real = false;
  int bottom_sign = 0;
  bool clustered = false;  // some log gap below 1e-3
};

// Spectrum from trusted characteristic coefficients (c3 nonzero).  Isolated
// extreme roots are accurate to ~1e-13; magnitude clusters are snapped to the
// exact symmetric means they must have.
LogSpectrum spectrum_from_cubic(const CubicCoeffs& c);

// Throws std::domain_error when the matrix is singular or when the eigenvalue
// spread has pushed the second characteristic coefficient below the rounding
// noise of the mantissa (use structured products in that regime).
LogSpectrum log_eigenvalues(const ScaledMat3& m);

}  // namespace trifins
