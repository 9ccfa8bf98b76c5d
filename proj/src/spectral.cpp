#include "trifins/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace trifins {

double FamilyParam::as_t() const {
  if (!(value > 0)) throw std::invalid_argument("family parameter must be positive");
  return kind == Kind::T ? value : std::sqrt(value);
}

std::string FamilyParam::describe() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s=%.12g", kind == Kind::T ? "t" : "t^2", value);
  return buf;
}

ScaledMat3 evaluate_scaled(const NumericRep& rep, const std::string& word) {
  require_valid_word(word);
  ScaledMat3 m = ScaledMat3::identity();
  for (char ch : product_order(word)) m = m.times(rep.generator(letter_index(ch)));
  return m;
}

ScaledReal scaled_specialize(const LaurentPoly& poly, double t) {
  if (!(t > 0)) throw std::invalid_argument("specialization parameter must be positive");
  double logt = std::log(t);
  ScaledReal sum;
  for (const auto& [e, coeff] : poly.terms())
    sum = sum + ScaledReal::from_parts(coeff.to_double(), e * logt);
  return sum;
}

JordanPoint jordan_projection(const NumericRep& rep, const std::string& word) {
  std::string w = reduce_word(word);
  if (w.size() % 2 != 0)
    throw std::invalid_argument("Jordan projection needs an orientation-preserving (even) word");
  if (w.empty()) return {0.0, 0.0};
  // Characteristic coefficients come from the exact symbolic matrix,
  // specialized in log space.  A float product of the generator matrices
  // loses the trace of near-elliptic elements and the lower spectrum of
  // strongly hyperbolic ones to cancellation; the symbolic coefficients stay
  // accurate at any parameter and any word length.
  Mat3<LaurentPoly> mw = shared_symbolic(rep.pres()).evaluate(w);
  CubicCoeffs c;
  c.c1 = scaled_specialize(mw.trace(), rep.t());
  c.c2 = scaled_specialize(mw.second_invariant(), rep.t());
  c.c3 = ScaledReal::from(1.0);  // even words land in the unimodular group
  LogSpectrum ls = spectrum_from_cubic(c);
  JordanPoint pt{ls.l[0], -ls.l[2]};
  if (pt.x == 0) pt.x = 0.0;  // normalize -0 so serialized output is canonical
  if (pt.y == 0) pt.y = 0.0;
  return pt;
}

std::pair<int, int> trace_top_degrees(const SymbolicRep& rep, const std::string& word) {
  std::string w = reduce_word(word);
  LaurentPoly fwd = rep.evaluate(w).trace();
  LaurentPoly rev = rep.evaluate(inverse_word(w)).trace();
  if (fwd.is_zero() || rev.is_zero())
    throw std::domain_error("trace is identically zero; top degree undefined");
  return {fwd.top_degree(), rev.top_degree()};
}

// ---------------------------------------------------------------------------
// Conjugacy class enumeration
// ---------------------------------------------------------------------------

namespace {

// Union-find over canonical element identifiers.
struct UnionFind {
  std::unordered_map<std::string, std::string> parent;

  const std::string& find(const std::string& x) {
    auto it = parent.find(x);
    if (it == parent.end()) {
      parent.emplace(x, x);
      return parent.find(x)->first;
    }
    if (it->second == x) return it->first;
    std::string root = find(it->second);
    it->second = root;
    return parent.find(x)->second;
  }

  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra != rb) parent[ra] = rb;
  }
};

// Lexicographically least rotation of a string.
std::string least_rotation(const std::string& s) {
  if (s.empty()) return s;
  std::string best = s;
  std::string cur = s;
  for (size_t i = 1; i < s.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

bool word_order_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<std::string> enumerate_even_classes(const ElementTable& table, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be nonnegative");

  // Cyclically reduced even words up to max_len, grouped by string rotation
  // first (cheap), then merged through exact element identifiers, which
  // catches coincidences forced by the rotation-order relations.
  std::set<std::string, decltype(&word_order_less)> necklaces(&word_order_less);

  std::string w;
  auto emit = [&](auto&& self) -> void {
    size_t n = w.size();
    if (n >= 2 && n % 2 == 0 && w.front() != w.back()) necklaces.insert(least_rotation(w));
    if (static_cast<int>(n) >= max_len) return;
    for (char ch = 'a'; ch <= 'c'; ++ch) {
      if (!w.empty() && w.back() == ch) continue;
      w.push_back(ch);
      self(self);
      w.pop_back();
    }
  };
  emit(emit);

  UnionFind uf;
  std::unordered_map<std::string, std::string> best_word_for_root;  // root id -> representative

  auto attach = [&](const std::string& word, const std::vector<std::string>& ids) {
    for (size_t i = 1; i < ids.size(); ++i) uf.unite(ids[0], ids[i]);
    std::string root = uf.find(ids[0]);
    auto it = best_word_for_root.find(root);
    if (it == best_word_for_root.end() || word_order_less(word, it->second))
      best_word_for_root[root] = word;
  };

  attach("", {table.identity_id()});

  for (const auto& neck : necklaces) {
    size_t n = neck.size();
    // matrix(uv) = matrix(v) * matrix(u) under the composition convention,
    // so the rotation s_{k+1}..s_n s_1..s_k has matrix(P_k) * matrix(S_k)
    // with P_k = s_1..s_k and S_k = s_{k+1}..s_n.
    std::vector<Mat3<NFElem>> prefix(n + 1), suffix(n + 1);
    prefix[0] = table.identity();
    for (size_t k = 0; k < n; ++k)
      prefix[k + 1] = table.generator(letter_index(neck[k])) * prefix[k];
    suffix[n] = table.identity();
    for (size_t k = n; k-- > 0;)
      suffix[k] = suffix[k + 1] * table.generator(letter_index(neck[k]));

    std::vector<std::string> ids;
    ids.reserve(n);
    for (size_t k = 0; k < n; ++k) ids.push_back(ElementTable::id_of(prefix[k] * suffix[k]));
    attach(neck, ids);
  }

  // Re-resolve roots after all unions, then collect representatives.
  std::unordered_map<std::string, std::string> best_final;
  for (auto& [root, word] : best_word_for_root) {
    std::string r = uf.find(root);
    auto it = best_final.find(r);
    if (it == best_final.end() || word_order_less(word, it->second)) best_final[r] = word;
  }
  std::vector<std::string> out;
  out.reserve(best_final.size());
  for (auto& [_, word] : best_final) out.push_back(word);
  std::sort(out.begin(), out.end(), &word_order_less);
  return out;
}

ScanResult jordan_scan(const Presentation& pres, const FamilyParam& param, int max_len) {
  NumericRep rep(pres, param.as_t());
  ScanResult scan;
  scan.t = rep.t();
  for (const std::string& w : enumerate_even_classes(shared_table(pres), max_len)) {
    JordanPoint p = jordan_projection(rep, w);
    scan.rows.push_back({w, static_cast<int>(w.size()), p.x, p.y});
  }
  // enumerate_even_classes is already (length, lex)-sorted.
  return scan;
}

LatticeStats lattice_proximity(const ScanResult& scan) {
  LatticeStats stats;
  double logt = std::log(scan.t);
  if (std::abs(logt) < 1e-12 || scan.rows.empty()) return stats;
  std::vector<double> dists;
  dists.reserve(scan.rows.size());
  double sum = 0;
  for (const auto& row : scan.rows) {
    double nx = row.x / logt, ny = row.y / logt;
    double d = std::hypot(nx - std::round(nx), ny - std::round(ny));
    dists.push_back(d);
    sum += d;
  }
  std::sort(dists.begin(), dists.end());
  stats.defined = true;
  stats.mean = sum / static_cast<double>(dists.size());
  // Nearest-rank 90th percentile.
  size_t rank = (dists.size() * 9 + 9) / 10;  // ceil(0.9 n)
  stats.p90 = dists[std::min(rank, dists.size()) - 1];
  return stats;
}

void write_scan_csv(std::ostream& os, const ScanResult& scan) {
  os << "word,length,x_logl1,y_neg_logl3\n";
  char buf[128];
  for (const auto& row : scan.rows) {
    std::snprintf(buf, sizeof buf, "%d,%.12g,%.12g", row.length, row.x, row.y);
    os << row.word << ',' << buf << '\n';
  }
}

}  // namespace trifins
