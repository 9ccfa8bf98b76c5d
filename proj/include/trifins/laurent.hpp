#pragma once

#include <map>
#include <string>

#include "trifins/number_field.hpp"

namespace trifins {

// Laurent polynomial in one variable t with NFElem coefficients.
// Canonical invariant: no stored coefficient is zero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(const FieldPtr& f) : field_(f) {}

  static LaurentPoly zero(const FieldPtr& f) { return LaurentPoly(f); }
  static LaurentPoly constant(const NFElem& c);
  static LaurentPoly monomial(int exp, const NFElem& coeff);
  static LaurentPoly variable(const FieldPtr& f);  // t

  const FieldPtr& field() const { return field_; }
  const std::map<int, NFElem>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  // Largest exponent with nonzero coefficient; throws std::domain_error on zero.
  int top_degree() const;
  int bottom_degree() const;
  const NFElem& coeff_ref(int exp) const;  // must exist
  NFElem coeff(int exp) const;             // zero if absent

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Division when the divisor is a single monomial (throws otherwise).
  LaurentPoly div_monomial(const LaurentPoly& o) const;

  double evaluate(double t) const;
  // Exact specialization at rational t (t nonzero if negative exponents occur).
  NFElem evaluate_exact(const Rational& t) const;

  std::string to_string() const;

 private:
  void set(int exp, NFElem c);

  FieldPtr field_;
  std::map<int, NFElem> terms_;
};

}  // namespace trifins
