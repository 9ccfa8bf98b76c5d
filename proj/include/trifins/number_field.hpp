#pragma once

#include <memory>
#include <string>
#include <vector>

#include "trifins/rational.hpp"

namespace trifins {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// The real field Q(2 cos(pi/m)).  The minimal polynomial of the generator
// y = 2 cos(pi/m) is obtained by deflating the (2m)-th cyclotomic polynomial,
// which is palindromic, through the substitution y = x + 1/x.
class NumberField {
 public:
  static FieldPtr get(int m);  // cached, m >= 2

  int order() const { return m_; }
  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  // Monic minimal polynomial of the generator, ascending coefficients.
  const std::vector<Rational>& min_poly() const { return min_poly_; }
  // Float embedding of the generator, a root of min_poly().
  double generator_value() const { return y_; }

 private:
  NumberField(int m, std::vector<Rational> poly, double y)
      : m_(m), min_poly_(std::move(poly)), y_(y) {}

  int m_;
  std::vector<Rational> min_poly_;
  double y_;
};

// Element of a NumberField: rational coordinates in the power basis 1, y, ..., y^(deg-1).
class NFElem {
 public:
  NFElem() = default;  // no field attached; only valid as a moved-from shell

  static NFElem zero(const FieldPtr& f);
  static NFElem one(const FieldPtr& f);
  static NFElem generator(const FieldPtr& f);
  static NFElem of_rational(const FieldPtr& f, const Rational& q);
  static NFElem from_coords(const FieldPtr& f, std::vector<Rational> coords);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  double to_double() const;

  NFElem operator+(const NFElem& o) const;
  NFElem operator-(const NFElem& o) const;
  NFElem operator-() const;
  NFElem operator*(const NFElem& o) const;
  NFElem inverse() const;  // throws std::domain_error on zero
  bool operator==(const NFElem& o) const;
  bool operator!=(const NFElem& o) const { return !(*this == o); }

  // Human-readable polynomial in y, e.g. "y^2 - 2".
  std::string to_string() const;
  // Canonical key fragment for hashing/ordering of exact matrices.
  void append_key(std::string& out) const;

 private:
  NFElem(FieldPtr f, std::vector<Rational> c) : field_(std::move(f)), c_(std::move(c)) {}
  void check_same_field(const NFElem& o) const;

  FieldPtr field_;
  std::vector<Rational> c_;
};

// 2 cos(k pi / m) as an element of Q(2 cos(pi/m)).
NFElem cos_embed(const FieldPtr& f, int k);

// n-th cyclotomic polynomial, ascending integer coefficients (as rationals).
std::vector<Rational> cyclotomic_polynomial(int n);

}  // namespace trifins
