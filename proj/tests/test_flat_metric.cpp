#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "trifins/finsler_triangle.hpp"
#include "trifins/tiling.hpp"

using namespace trifins;
using cplx = std::complex<double>;

namespace {

const std::string kLongWord = "cbcacbcacbcacbacbabcabab";

std::string random_even_word(std::mt19937& rng, int len) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::string w;
  while (static_cast<int>(w.size()) < len) {
    char ch = static_cast<char>('a' + pick(rng));
    if (!w.empty() && w.back() == ch) continue;
    w.push_back(ch);
  }
  return w;
}

}  // namespace

TEST_CASE("triangular norm: pinned values") {
  CHECK(finsler_delta_eval(cplx(1, 0), cplx(1, 0)) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(finsler_delta_eval(cplx(1, 0), cplx(-1, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(finsler_delta_eval(cplx(1, 0), cplx(0, 1)) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(finsler_delta_eval(cplx(0, 0), cplx(13, -7)) == 0.0);
}

TEST_CASE("triangular norm: homogeneity, cubic parameter scaling, subadditivity") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> pos(0.1, 3.0);
  for (int i = 0; i < 200; ++i) {
    cplx mu(u(rng), u(rng)), v(u(rng), u(rng)), vv(u(rng), u(rng));
    double lam = pos(rng), a = pos(rng);
    double f = finsler_delta_eval(mu, v);
    CHECK(f >= 0.0);
    CHECK(finsler_delta_eval(mu, lam * v) ==
          doctest::Approx(lam * f).scale(1.0 + std::abs(f)).epsilon(1e-12));
    CHECK(finsler_delta_eval(a * a * a * mu, v) ==
          doctest::Approx(a * f).scale(1.0 + std::abs(f)).epsilon(1e-12));
    CHECK(finsler_delta_eval(mu, v + vv) <= f + finsler_delta_eval(mu, vv) + 1e-12);
  }
}

TEST_CASE("tube around an elliptic word develops the full vertex star") {
  Presentation pqr(4, 4, 4);
  TilingPatch patch = build_tube(pqr, "ab", 1);
  CHECK(patch.spine.size() == 7);
  CHECK(patch.word_len == 2);

  int idx0 = patch.triangle_by_id(element_id(pqr, ""));
  REQUIRE(idx0 == 0);
  int cls = patch.triangles[0].vertex[kCornerAB];
  std::vector<std::string> star = {"",     "a",     "ab",     "aba",
                                   "abab", "ababa", "ababab", "abababa"};
  for (const auto& u : star) {
    int i = patch.triangle_by_id(element_id(pqr, u));
    REQUIRE(i >= 0);
    CHECK(patch.triangles[static_cast<size_t>(i)].vertex[kCornerAB] == cls);
    CHECK(patch.triangles[static_cast<size_t>(i)].grey == (u.size() % 2 == 0));
  }

  // The word acts on its own vertex star as the two-step rotation g -> w*g.
  CHECK(patch.action[0] == patch.triangle_by_id(element_id(pqr, "ab")));
  int ia = patch.triangle_by_id(element_id(pqr, "a"));
  CHECK(patch.action[static_cast<size_t>(ia)] ==
        patch.triangle_by_id(element_id(pqr, "aba")));
}

TEST_CASE("tube adjacency matches right multiplication by generators") {
  Presentation pqr(3, 3, 4);
  TilingPatch patch = build_tube(pqr, "abac", 1);
  for (const auto& t : patch.triangles) {
    for (int s = 0; s < 3; ++s) {
      int j = t.neighbor[static_cast<size_t>(s)];
      if (j < 0) continue;
      const auto& o = patch.triangles[static_cast<size_t>(j)];
      CHECK(o.grey != t.grey);
      CHECK(o.neighbor[static_cast<size_t>(s)] == patch.triangle_by_id(t.id));
    }
  }
}

TEST_CASE("edge weights: values, reverse pairing, boundary totals of one tile") {
  Presentation pqr(4, 4, 4);
  TilingPatch patch = build_tube(pqr, "abac", 2);
  edge_weights(patch);
  REQUIRE(!patch.edges.empty());
  REQUIRE(patch.edges.size() % 2 == 0);
  for (size_t k = 0; k + 1 < patch.edges.size(); k += 2) {
    const DirectedEdge& fwd = patch.edges[k];
    const DirectedEdge& rev = patch.edges[k + 1];
    CHECK(fwd.weight == 2);
    CHECK(rev.weight == 1);
    CHECK(fwd.from == rev.to);
    CHECK(fwd.to == rev.from);
    CHECK(fwd.triangle == rev.triangle);
    CHECK(fwd.side == rev.side);
  }
  // Going counterclockwise around one grey tile costs 6, clockwise 3.  The
  // base tile has index 0 so all three of its sides are recorded against it.
  REQUIRE(patch.triangles[0].grey);
  int ccw = 0, cw = 0;
  for (const auto& e : patch.edges) {
    if (e.triangle != 0) continue;
    (e.weight == 2 ? ccw : cw) += e.weight;
  }
  CHECK(ccw == 6);
  CHECK(cw == 3);
}

TEST_CASE("pinned translation lengths of the sample hyperbolic word") {
  Presentation pqr(4, 4, 4);
  CHECK(translation_length(pqr, kLongWord) == 18);
  CHECK(translation_length(pqr, inverse_word(kLongWord)) == 15);
  CHECK(translation_length(pqr, "ab") == 0);
  CHECK(translation_length(pqr, "") == 0);
  CHECK(translation_length(pqr, "aa") == 0);
}

TEST_CASE("translation length is a conjugacy invariant") {
  Presentation pqr(4, 4, 4);
  for (const std::string& w :
       {std::string("abac"), std::string("abcb"), std::string("acbcab"), std::string("bcabcabc")}) {
    int base = translation_length(pqr, w);
    std::string rot = w.substr(2) + w.substr(0, 2);
    CHECK(translation_length(pqr, rot) == base);
    CHECK(translation_length(pqr, "c" + w + "c") == base);
    CHECK(translation_length(pqr, "ba" + w + "ab") == base);
  }
}

TEST_CASE("trace degrees against combinatorial lengths") {
  Presentation pqr(4, 4, 4);
  DegreeLengthReport rep = check_degree_length(pqr, kLongWord);
  CHECK(rep.d1 == 6);
  CHECK(rep.d2 == 5);
  CHECK(rep.length == 18);
  CHECK(rep.length_inverse == 15);
  CHECK(rep.consistent);

  DegreeLengthReport ell = check_degree_length(pqr, "ab");
  CHECK(ell.d1 == 0);
  CHECK(ell.d2 == 0);
  CHECK(ell.length == 0);
  CHECK(ell.length_inverse == 0);
  CHECK(ell.consistent);

  CHECK_THROWS_AS(check_degree_length(pqr, "abc"), std::invalid_argument);
}

TEST_CASE("random even words are degree/length consistent in two groups") {
  std::mt19937 rng(404);
  for (auto [p, q, r] : {std::array<int, 3>{4, 4, 4}, std::array<int, 3>{3, 3, 4}}) {
    Presentation pqr(p, q, r);
    for (int trial = 0; trial < 3; ++trial) {
      std::string w = random_even_word(rng, 8);
      CAPTURE(w);
      DegreeLengthReport rep = check_degree_length(pqr, w);
      CHECK(rep.consistent);
    }
  }
}
