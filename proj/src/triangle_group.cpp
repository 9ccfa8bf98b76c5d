#include "trifins/triangle_group.hpp"

#include <array>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace trifins {

namespace {

// Pair orders by the complementary generator: (a,b) -> p, (b,c) -> q, (c,a) -> r.
int pair_order(const Presentation& pres, int i, int j) {
  int k = 3 - i - j;
  switch (k) {
    case 2: return pres.p;  // a, b
    case 0: return pres.q;  // b, c
    case 1: return pres.r;  // c, a
    default: throw std::invalid_argument("pair_order needs two distinct generators");
  }
}

}  // namespace

Presentation::Presentation(int p_, int q_, int r_) : p(p_), q(q_), r(r_) {
  if (p < 2 || q < 2 || r < 2) throw std::invalid_argument("presentation orders must be >= 2");
  // Hyperbolicity: 1/p + 1/q + 1/r < 1, checked in integers.
  long lhs = static_cast<long>(q) * r + static_cast<long>(p) * r + static_cast<long>(p) * q;
  long rhs = static_cast<long>(p) * q * r;
  if (lhs >= rhs)
    throw std::invalid_argument("presentation (" + std::to_string(p) + "," + std::to_string(q) +
                                "," + std::to_string(r) + ") is not hyperbolic");
}

int Presentation::order_of_pair(int i, int j) const { return pair_order(*this, i, j); }

int Presentation::lcm_pqr() const { return std::lcm(std::lcm(p, q), r); }

std::string Presentation::str() const {
  return std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r);
}

Presentation Presentation::parse(const std::string& s) {
  int p = 0, q = 0, r = 0;
  char c1 = 0, c2 = 0;
  std::istringstream is(s);
  if (!(is >> p >> c1 >> q >> c2 >> r) || c1 != ',' || c2 != ',' || !(is >> std::ws).eof())
    throw std::invalid_argument("presentation must be \"p,q,r\", got \"" + s + "\"");
  return Presentation(p, q, r);
}

bool is_valid_word(const std::string& w) {
  for (char ch : w)
    if (ch != 'a' && ch != 'b' && ch != 'c') return false;
  return true;
}

void require_valid_word(const std::string& w) {
  if (!is_valid_word(w)) throw std::invalid_argument("word must use only letters a, b, c: \"" + w + "\"");
}

std::string reduce_word(std::string w) {
  require_valid_word(w);
  std::string out;
  out.reserve(w.size());
  for (char ch : w) {
    if (!out.empty() && out.back() == ch)
      out.pop_back();  // ss = identity
    else
      out.push_back(ch);
  }
  return out;
}

std::string cyclic_reduce(const std::string& w) {
  std::string r = reduce_word(w);
  size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1]) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

std::string inverse_word(const std::string& w) {
  require_valid_word(w);
  return std::string(w.rbegin(), w.rend());
}

// ---------------------------------------------------------------------------
// Symbolic representation
// ---------------------------------------------------------------------------

namespace {

// Pairing matrix over Laurent polynomials: diagonal 2, off-diagonal entries
// -2cos(pi/p)*t and -2cos(pi/p)/t between rows a and b, -2cos(pi/q) between
// b and c, and -2cos(pi/r) between c and a.
Mat3<LaurentPoly> symbolic_gram(const Presentation& pres, const FieldPtr& f) {
  int L = pres.lcm_pqr();
  NFElem cp = cos_embed(f, L / pres.p), cq = cos_embed(f, L / pres.q), cr = cos_embed(f, L / pres.r);
  LaurentPoly two = LaurentPoly::constant(NFElem::of_rational(f, 2));
  Mat3<LaurentPoly> g;
  g.at(0, 0) = two;
  g.at(1, 1) = two;
  g.at(2, 2) = two;
  g.at(0, 1) = LaurentPoly::monomial(1, -cp);
  g.at(1, 0) = LaurentPoly::monomial(-1, -cp);
  g.at(1, 2) = LaurentPoly::constant(-cq);
  g.at(2, 1) = LaurentPoly::constant(-cq);
  g.at(2, 0) = LaurentPoly::constant(-cr);
  g.at(0, 2) = LaurentPoly::constant(-cr);
  return g;
}

template <class R>
Mat3<R> reflection_from_gram(const Mat3<R>& gram, int row, const R& one) {
  // Identity with row `row` replaced by e_row - (gram row).
  Mat3<R> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      R delta = (i == j) ? one : (one - one);
      m.at(i, j) = (i == row) ? delta - gram.at(i, j) : delta;
    }
  return m;
}

template <class R>
Mat3<R> ring_identity(const R& one) {
  R zero = one - one;
  return Mat3<R>{{one, zero, zero, zero, one, zero, zero, zero, one}};
}

}  // namespace

SymbolicRep::SymbolicRep(const Presentation& pres)
    : pres_(pres), field_(NumberField::get(pres.lcm_pqr())) {
  gram_ = symbolic_gram(pres_, field_);
  LaurentPoly one = LaurentPoly::constant(NFElem::one(field_));
  for (int i = 0; i < 3; ++i) gen_[static_cast<size_t>(i)] = reflection_from_gram(gram_, i, one);
  verify_relations();
}

Mat3<LaurentPoly> SymbolicRep::identity() const {
  return ring_identity(LaurentPoly::constant(NFElem::one(field_)));
}

Mat3<LaurentPoly> SymbolicRep::evaluate(const std::string& word) const {
  require_valid_word(word);
  Mat3<LaurentPoly> m = identity();
  for (char ch : product_order(word)) m = m * generator(letter_index(ch));
  return m;
}

void SymbolicRep::verify_relations() const {
  Mat3<LaurentPoly> id = identity();
  LaurentPoly minus_one = LaurentPoly::constant(-NFElem::one(field_));
  for (int i = 0; i < 3; ++i) {
    const auto& g = generator(i);
    if (!(g * g == id)) throw std::runtime_error("generator is not an involution");
    if (!(g.det() == minus_one)) throw std::runtime_error("generator determinant is not -1");
  }
  const int orders[3] = {pres_.p, pres_.q, pres_.r};
  const int pairs[3][2] = {{0, 1}, {1, 2}, {2, 0}};
  for (int k = 0; k < 3; ++k) {
    Mat3<LaurentPoly> prod = generator(pairs[k][0]) * generator(pairs[k][1]);
    Mat3<LaurentPoly> acc = id;
    for (int i = 0; i < orders[k]; ++i) acc = acc * prod;
    if (!(acc == id)) throw std::runtime_error("pair rotation order relation failed");
  }
}

LaurentPoly SymbolicRep::triple_ratio() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && gram_.at(i, j).is_zero())
        throw std::domain_error("triple ratio undefined: a pairing entry vanishes (an order equals 2)");
  // alpha_1(v_2) alpha_2(v_3) alpha_3(v_1) / (alpha_1(v_3) alpha_2(v_1) alpha_3(v_2))
  LaurentPoly num = gram_.at(0, 1) * gram_.at(1, 2) * gram_.at(2, 0);
  LaurentPoly den = gram_.at(0, 2) * gram_.at(1, 0) * gram_.at(2, 1);
  return num.div_monomial(den);
}

// ---------------------------------------------------------------------------
// Numeric representation
// ---------------------------------------------------------------------------

NumericRep::NumericRep(const Presentation& pres, double t) : pres_(pres), t_(t) {
  if (!(t > 0)) throw std::invalid_argument("parameter t must be positive");
  using std::numbers::pi;
  // Exact zero at order 2, so degeneracy checks see a true zero entry.
  auto two_cos = [](int n) { return n == 2 ? 0.0 : 2 * std::cos(pi / n); };
  double cp = two_cos(pres.p), cq = two_cos(pres.q), cr = two_cos(pres.r);
  gram_ = Mat3<double>{{2, -cp * t, -cr, -cp / t, 2, -cq, -cr, -cq, 2}};
  for (int i = 0; i < 3; ++i) gen_[static_cast<size_t>(i)] = reflection_from_gram(gram_, i, 1.0);
  verify_relations();
}

Mat3<double> NumericRep::evaluate_direct(const std::string& word) const {
  require_valid_word(word);
  Mat3<double> m = ring_identity(1.0);
  for (char ch : product_order(word)) m = m * generator(letter_index(ch));
  return m;
}

double NumericRep::triple_ratio() const {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j && gram_.at(i, j) == 0)
        throw std::domain_error("triple ratio undefined: a pairing entry vanishes (an order equals 2)");
  return (gram_.at(0, 1) * gram_.at(1, 2) * gram_.at(2, 0)) /
         (gram_.at(0, 2) * gram_.at(1, 0) * gram_.at(2, 1));
}

void NumericRep::verify_relations() const {
  // Float check, scaled by the magnitudes entering each cancellation so it
  // stays meaningful at large t.
  auto check_identity = [](const Mat3<double>& prod, const Mat3<double>& x, const Mat3<double>& y) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double target = (i == j) ? 1.0 : 0.0;
        double scale = 1.0;
        for (int k = 0; k < 3; ++k) scale += std::abs(x.at(i, k)) * std::abs(y.at(k, j));
        if (std::abs(prod.at(i, j) - target) > 1e-9 * scale)
          throw std::runtime_error("numeric relation check failed");
      }
  };
  for (int i = 0; i < 3; ++i) {
    const auto& g = generator(i);
    check_identity(g * g, g, g);
    if (std::abs(g.det() + 1.0) > 1e-9 * (1 + std::abs(g.at(0, 1)) + std::abs(g.at(0, 2))))
      throw std::runtime_error("numeric generator determinant is not -1");
  }
}

// ---------------------------------------------------------------------------
// Exact element identification at t = 1
// ---------------------------------------------------------------------------

ElementTable::ElementTable(const Presentation& pres)
    : pres_(pres), field_(NumberField::get(pres.lcm_pqr())) {
  int L = pres.lcm_pqr();
  NFElem cp = cos_embed(field_, L / pres.p), cq = cos_embed(field_, L / pres.q),
         cr = cos_embed(field_, L / pres.r);
  NFElem two = NFElem::of_rational(field_, 2);
  Mat3<NFElem> gram{{two, -cp, -cr, -cp, two, -cq, -cr, -cq, two}};
  NFElem one = NFElem::one(field_);
  for (int i = 0; i < 3; ++i) gen_[static_cast<size_t>(i)] = reflection_from_gram(gram, i, one);
  id_ = ring_identity(one);
  id_key_ = id_of(id_);
}

Mat3<NFElem> ElementTable::evaluate(const std::string& word) const {
  require_valid_word(word);
  Mat3<NFElem> m = id_;
  for (char ch : product_order(word)) m = m * generator(letter_index(ch));
  return m;
}

std::string ElementTable::id_of(const Mat3<NFElem>& m) {
  std::string key;
  key.reserve(64);
  for (int k = 0; k < 9; ++k) {
    m.e[static_cast<size_t>(k)].append_key(key);
    key += ';';
  }
  return key;
}

std::string element_id(const Presentation& pres, const std::string& word) {
  const ElementTable& table = shared_table(pres);
  return table.id_of(table.evaluate(reduce_word(word)));
}

namespace {

template <class T>
const T& shared_instance(const Presentation& pres) {
  static std::mutex mu;
  static std::map<std::array<int, 3>, std::unique_ptr<T>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{pres.p, pres.q, pres.r}];
  if (!slot) slot = std::make_unique<T>(pres);
  return *slot;
}

}  // namespace

const SymbolicRep& shared_symbolic(const Presentation& pres) {
  return shared_instance<SymbolicRep>(pres);
}

const ElementTable& shared_table(const Presentation& pres) {
  return shared_instance<ElementTable>(pres);
}

}  // namespace trifins
