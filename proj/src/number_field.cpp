#include "trifins/number_field.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace trifins {

namespace {

using Poly = std::vector<Rational>;  // ascending coefficients

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient of a by b (b nonzero); remainder returned through rem.
Poly poly_divmod(Poly a, const Poly& b, Poly& rem) {
  if (b.empty()) throw std::invalid_argument("polynomial division by zero");
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational f = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
    if (a.empty()) break;
    if (a.size() >= b.size() && a.back() == 0) trim(a);
  }
  rem = std::move(a);
  trim(q);
  return q;
}

Poly poly_mod(const Poly& a, const Poly& b) {
  Poly r;
  poly_divmod(a, b, r);
  return r;
}

// Newton correction |p(x)/p'(x)|: backward-stable distance from x to the
// nearest root, immune to the growth of the coefficients with the degree.
double root_distance(const Poly& p, double x) {
  double v = 0, d = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    d = d * x + v;
    v = v * x + it->get_d();
  }
  if (d == 0) return std::abs(v);
  return std::abs(v / d);
}

// Deflate a palindromic polynomial of even degree D through y = x + 1/x.
// Uses the monic Chebyshev-like basis T0 = 2, T1 = y, Tk = y*T(k-1) - T(k-2),
// which satisfies Tk(x + 1/x) = x^k + x^(-k).
Poly deflate_palindrome(const Poly& p) {
  if (p.size() % 2 == 0) throw std::invalid_argument("deflation needs even degree");
  size_t half = (p.size() - 1) / 2;
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != p[p.size() - 1 - i]) throw std::invalid_argument("polynomial is not palindromic");
  Poly t_prev = {Rational(2)};              // T0
  Poly t_cur = {Rational(0), Rational(1)};  // T1
  Poly out = {p[half]};
  for (size_t k = 1; k <= half; ++k) {
    Poly add = t_cur;
    for (auto& c : add) c *= p[half + k];
    out.resize(std::max(out.size(), add.size()), Rational(0));
    for (size_t i = 0; i < add.size(); ++i) out[i] += add[i];
    if (k < half) {
      Poly t_next = poly_sub(poly_mul({Rational(0), Rational(1)}, t_cur), t_prev);
      t_prev = std::move(t_cur);
      t_cur = std::move(t_next);
    }
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(int n) {
  static std::map<int, Poly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of cyclotomics of proper divisors.
  std::function<Poly(int)> compute = [&](int k) -> Poly {
    auto hit = cache.find(k);
    if (hit != cache.end()) return hit->second;
    Poly num(k + 1, Rational(0));
    num[0] = -1;
    num[k] = 1;
    Poly den = {Rational(1)};
    for (int d = 1; d < k; ++d)
      if (k % d == 0) den = poly_mul(den, compute(d));
    Poly rem;
    Poly q = poly_divmod(num, den, rem);
    if (!rem.empty()) throw std::logic_error("cyclotomic division not exact");
    cache[k] = q;
    return q;
  };
  return compute(n);
}

FieldPtr NumberField::get(int m) {
  if (m < 2) throw std::invalid_argument("NumberField order must be >= 2");
  static std::map<int, FieldPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;

  Poly cyc = cyclotomic_polynomial(2 * m);
  Poly mp = deflate_palindrome(cyc);
  if (mp.empty() || mp.back() != 1) throw std::logic_error("deflated minimal polynomial not monic");
  double y = 2.0 * std::cos(std::numbers::pi / m);
  if (root_distance(mp, y) > 1e-12)
    throw std::logic_error("float generator is not a root of the minimal polynomial");
  FieldPtr f(new NumberField(m, std::move(mp), y));
  cache[m] = f;
  return f;
}

NFElem NFElem::zero(const FieldPtr& f) {
  return NFElem(f, std::vector<Rational>(f->degree(), Rational(0)));
}

NFElem NFElem::one(const FieldPtr& f) { return of_rational(f, Rational(1)); }

NFElem NFElem::generator(const FieldPtr& f) {
  std::vector<Rational> c(f->degree(), Rational(0));
  if (f->degree() == 1) {
    // Degree-one field: the generator itself is rational, -min_poly[0].
    c[0] = -f->min_poly()[0];
  } else {
    c[1] = 1;
  }
  return NFElem(f, std::move(c));
}

NFElem NFElem::of_rational(const FieldPtr& f, const Rational& q) {
  std::vector<Rational> c(f->degree(), Rational(0));
  c[0] = q;
  return NFElem(f, std::move(c));
}

NFElem NFElem::from_coords(const FieldPtr& f, std::vector<Rational> coords) {
  if (static_cast<int>(coords.size()) != f->degree())
    throw std::invalid_argument("coordinate vector has wrong length");
  for (auto& q : coords) q.canonicalize();
  return NFElem(f, std::move(coords));
}

void NFElem::check_same_field(const NFElem& o) const {
  if (!field_ || !o.field_ || field_->order() != o.field_->order())
    throw std::invalid_argument("NFElem operands belong to different fields");
}

bool NFElem::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

double NFElem::to_double() const {
  double y = field_->generator_value();
  double v = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * y + it->get_d();
  return v;
}

NFElem NFElem::operator+(const NFElem& o) const {
  check_same_field(o);
  std::vector<Rational> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
  return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-(const NFElem& o) const {
  check_same_field(o);
  std::vector<Rational> c(c_);
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c_[i];
  return NFElem(field_, std::move(c));
}

NFElem NFElem::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& q : c) q = -q;
  return NFElem(field_, std::move(c));
}

NFElem NFElem::operator*(const NFElem& o) const {
  check_same_field(o);
  size_t deg = c_.size();
  std::vector<Rational> prod(2 * deg - 1, Rational(0));
  for (size_t i = 0; i < deg; ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < deg; ++j) {
      if (o.c_[j] == 0) continue;
      prod[i + j] += c_[i] * o.c_[j];
    }
  }
  // Reduce modulo the monic minimal polynomial.
  const auto& mp = field_->min_poly();
  for (size_t k = prod.size(); k-- > deg;) {
    if (prod[k] == 0) continue;
    Rational f = prod[k];
    prod[k] = 0;
    for (size_t i = 0; i < mp.size() - 1; ++i) prod[k - (mp.size() - 1) + i] -= f * mp[i];
  }
  prod.resize(deg);
  return NFElem(field_, std::move(prod));
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  // Extended Euclid in Q[x] against the minimal polynomial.
  Poly r0 = field_->min_poly();
  Poly r1(c_);
  trim(r1);
  Poly s0 = {};             // coefficient of r1 in r0
  Poly s1 = {Rational(1)};  // coefficient of r1 in r1
  while (!r1.empty()) {
    Poly rem;
    Poly q = poly_divmod(r0, r1, rem);
    Poly s_next = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s_next);
  }
  if (r0.size() != 1) throw std::logic_error("element not invertible: gcd with minimal polynomial nontrivial");
  Rational lead = r0[0];
  Poly inv = poly_mod(s0, field_->min_poly());
  std::vector<Rational> c(field_->degree(), Rational(0));
  for (size_t i = 0; i < inv.size(); ++i) c[i] = inv[i] / lead;
  return NFElem(field_, std::move(c));
}

bool NFElem::operator==(const NFElem& o) const {
  check_same_field(o);
  return c_ == o.c_;
}

std::string NFElem::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational q = c_[k];
    if (first) {
      if (q < 0) {
        os << "-";
        q = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    bool unit = (q == 1);
    if (k == 0 || !unit) os << q.get_str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << "y";
      if (k >= 2) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

void NFElem::append_key(std::string& out) const {
  for (const auto& q : c_) {
    out += q.get_str();
    out += ',';
  }
}

NFElem cos_embed(const FieldPtr& f, int k) {
  if (k < 0) k = -k;  // cosine is even
  NFElem two = NFElem::of_rational(f, Rational(2));
  if (k == 0) return two;
  NFElem y = NFElem::generator(f);
  if (k == 1) return y;
  NFElem prev = two, cur = y;
  for (int i = 2; i <= k; ++i) {
    NFElem next = y * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

}  // namespace trifins
