#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "trifins/laurent.hpp"
#include "trifins/mat3.hpp"
#include "trifins/number_field.hpp"

namespace trifins {

// Hyperbolic triangle reflection group with generators a, b, c and relations
// a^2 = b^2 = c^2 = (ab)^p = (bc)^q = (ca)^r = 1, requiring 1/p + 1/q + 1/r < 1.
struct Presentation {
  int p, q, r;

  Presentation(int p_, int q_, int r_);
  int order_of_pair(int i, int j) const;  // order of the product of generators i, j
  int lcm_pqr() const;
  std::string str() const;
  static Presentation parse(const std::string& s);  // "p,q,r"
  bool operator==(const Presentation& o) const { return p == o.p && q == o.q && r == o.r; }
};

// Words are strings over the alphabet {a, b, c}; a word is its own inverse
// letter-by-letter reversed since every generator is an involution.
bool is_valid_word(const std::string& w);
void require_valid_word(const std::string& w);
std::string reduce_word(std::string w);          // cancel adjacent equal letters to a reduced word
std::string cyclic_reduce(const std::string& w); // reduce, then cancel first/last letters pairwise
std::string inverse_word(const std::string& w);  // reversal
inline int letter_index(char ch) { return ch - 'a'; }

// Words denote compositions of reflections applied in reading order: the
// first letter acts first on points.  As matrices acting on column vectors,
// the product is therefore taken with the first letter as the innermost
// (rightmost) factor: matrix("xyz") = M(z) * M(y) * M(x).
inline std::string product_order(const std::string& w) { return std::string(w.rbegin(), w.rend()); }

// One-parameter family of representations into SL(3): generators are the
// identity with row i replaced by (identity row i) - (row i of the pairing
// matrix).  The pairing matrix couples the basis through scaled cosines, with
// the parameter t (and 1/t) on the a-b coupling.
class SymbolicRep {
 public:
  explicit SymbolicRep(const Presentation& pres);

  const Presentation& pres() const { return pres_; }
  const FieldPtr& field() const { return field_; }
  const Mat3<LaurentPoly>& generator(int i) const { return gen_[static_cast<size_t>(i)]; }
  const Mat3<LaurentPoly>& gram() const { return gram_; }
  Mat3<LaurentPoly> identity() const;

  Mat3<LaurentPoly> evaluate(const std::string& word) const;
  // The projective invariant of the flag triple; a perfect square monomial t^2.
  // Throws std::domain_error when an off-diagonal pairing vanishes (some order = 2).
  LaurentPoly triple_ratio() const;

 private:
  void verify_relations() const;

  Presentation pres_;
  FieldPtr field_;
  Mat3<LaurentPoly> gram_;
  std::array<Mat3<LaurentPoly>, 3> gen_;
};

// Float specialization of the family at a concrete parameter value t > 0.
class NumericRep {
 public:
  NumericRep(const Presentation& pres, double t);

  const Presentation& pres() const { return pres_; }
  double t() const { return t_; }
  const Mat3<double>& generator(int i) const { return gen_[static_cast<size_t>(i)]; }
  const Mat3<double>& gram() const { return gram_; }

  // Plain float product; usable while entries stay inside double range.
  Mat3<double> evaluate_direct(const std::string& word) const;
  double triple_ratio() const;

 private:
  void verify_relations() const;

  Presentation pres_;
  double t_;
  Mat3<double> gram_;
  std::array<Mat3<double>, 3> gen_;
};

// Exact matrices of the representation at t = 1; this specialization is
// faithful, so serialized matrices are canonical identifiers of group
// elements (used for dedup, conjugacy classes, and the reflection tiling).
class ElementTable {
 public:
  explicit ElementTable(const Presentation& pres);

  const Presentation& pres() const { return pres_; }
  const FieldPtr& field() const { return field_; }
  const Mat3<NFElem>& generator(int i) const { return gen_[static_cast<size_t>(i)]; }
  const Mat3<NFElem>& identity() const { return id_; }

  Mat3<NFElem> evaluate(const std::string& word) const;
  static std::string id_of(const Mat3<NFElem>& m);
  const std::string& identity_id() const { return id_key_; }

 private:
  Presentation pres_;
  FieldPtr field_;
  std::array<Mat3<NFElem>, 3> gen_;
  Mat3<NFElem> id_;
  std::string id_key_;
};

// Canonical identifier of the group element represented by a word.
std::string element_id(const Presentation& pres, const std::string& word);

// Process-wide caches.  Constructing these verifies the defining relations
// exactly, which is worth amortizing across scans and metric computations.
const SymbolicRep& shared_symbolic(const Presentation& pres);
const ElementTable& shared_table(const Presentation& pres);

}  // namespace trifins
