#pragma once

#include <array>
#include <cstddef>

namespace trifins {

// Dense 3x3 matrix over any ring with +, -, *.  No zero/one literals are
// required by the arithmetic, so exact coefficient rings work unchanged.
template <class R>
struct Mat3 {
  std::array<R, 9> e;

  R& at(int i, int j) { return e[static_cast<size_t>(3 * i + j)]; }
  const R& at(int i, int j) const { return e[static_cast<size_t>(3 * i + j)]; }

  friend Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        out.at(i, j) = a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j) + a.at(i, 2) * b.at(2, j);
    return out;
  }

  friend Mat3 operator+(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int k = 0; k < 9; ++k) out.e[k] = a.e[k] + b.e[k];
    return out;
  }

  friend Mat3 operator-(const Mat3& a, const Mat3& b) {
    Mat3 out;
    for (int k = 0; k < 9; ++k) out.e[k] = a.e[k] - b.e[k];
    return out;
  }

  R trace() const { return at(0, 0) + at(1, 1) + at(2, 2); }

  R det() const {
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
  }

  // Sum of principal 2x2 minors: the second elementary symmetric function of
  // the eigenvalues, i.e. the middle characteristic coefficient.
  R second_invariant() const {
    return at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1) + at(0, 0) * at(2, 2) -
           at(0, 2) * at(2, 0) + at(0, 0) * at(1, 1) - at(0, 1) * at(1, 0);
  }

  Mat3 transpose() const {
    Mat3 out;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out.at(i, j) = at(j, i);
    return out;
  }

  bool operator==(const Mat3& o) const { return e == o.e; }
  bool operator!=(const Mat3& o) const { return !(*this == o); }
};

}  // namespace trifins
