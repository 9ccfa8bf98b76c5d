#include "trifins/laurent.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace trifins {

LaurentPoly LaurentPoly::constant(const NFElem& c) { return monomial(0, c); }

LaurentPoly LaurentPoly::monomial(int exp, const NFElem& coeff) {
  LaurentPoly p(coeff.field());
  p.set(exp, coeff);
  return p;
}

LaurentPoly LaurentPoly::variable(const FieldPtr& f) { return monomial(1, NFElem::one(f)); }

void LaurentPoly::set(int exp, NFElem c) {
  if (c.is_zero())
    terms_.erase(exp);
  else
    terms_.insert_or_assign(exp, std::move(c));
}

int LaurentPoly::top_degree() const {
  if (terms_.empty()) throw std::domain_error("top degree of the zero Laurent polynomial is undefined");
  return terms_.rbegin()->first;
}

int LaurentPoly::bottom_degree() const {
  if (terms_.empty()) throw std::domain_error("bottom degree of the zero Laurent polynomial is undefined");
  return terms_.begin()->first;
}

const NFElem& LaurentPoly::coeff_ref(int exp) const {
  auto it = terms_.find(exp);
  if (it == terms_.end()) throw std::out_of_range("no such exponent");
  return it->second;
}

NFElem LaurentPoly::coeff(int exp) const {
  auto it = terms_.find(exp);
  if (it == terms_.end()) return NFElem::zero(field_);
  return it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end())
      out.terms_.emplace(e, c);
    else {
      NFElem s = it->second + c;
      if (s.is_zero())
        out.terms_.erase(it);
      else
        it->second = std::move(s);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly out(field_ ? field_ : o.field_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      NFElem prod = c1 * c2;
      if (prod.is_zero()) continue;
      auto it = out.terms_.find(e1 + e2);
      if (it == out.terms_.end())
        out.terms_.emplace(e1 + e2, std::move(prod));
      else {
        NFElem s = it->second + prod;
        if (s.is_zero())
          out.terms_.erase(it);
        else
          it->second = std::move(s);
      }
    }
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

LaurentPoly LaurentPoly::div_monomial(const LaurentPoly& o) const {
  if (o.terms_.size() != 1) throw std::domain_error("divisor is not a monomial");
  const auto& [de, dc] = *o.terms_.begin();
  NFElem inv = dc.inverse();
  LaurentPoly out(field_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e - de, c * inv);
  return out;
}

double LaurentPoly::evaluate(double t) const {
  double v = 0;
  for (const auto& [e, c] : terms_) v += c.to_double() * std::pow(t, e);
  return v;
}

NFElem LaurentPoly::evaluate_exact(const Rational& t) const {
  NFElem acc = NFElem::zero(field_);
  for (const auto& [e, c] : terms_) {
    Rational p(1);
    if (e >= 0)
      for (int i = 0; i < e; ++i) p *= t;
    else {
      if (t == 0) throw std::domain_error("negative exponent at t = 0");
      for (int i = 0; i < -e; ++i) p /= t;
    }
    acc = acc + c * NFElem::of_rational(field_, p);
  }
  return acc;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first != 0) {
      os << "*t";
      if (it->first != 1) os << "^" << it->first;
    }
  }
  return os.str();
}

}  // namespace trifins
