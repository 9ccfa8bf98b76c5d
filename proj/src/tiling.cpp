#include "trifins/tiling.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>
#include <utility>

namespace trifins {

int TilingPatch::triangle_by_id(const std::string& id) const {
  auto it = index_by_id.find(id);
  return it == index_by_id.end() ? -1 : it->second;
}

namespace {

// Letters of the two mirrors crossing at each corner type (AB, BC, CA).
constexpr int kCornerLetters[3][2] = {{0, 1}, {1, 2}, {2, 0}};

// Corner types at the ends of each side, ordered so that from -> to is the
// counterclockwise direction around the grey tile at the side.
constexpr int kSideFrom[3] = {kCornerCA, kCornerAB, kCornerBC};  // sides a, b, c
constexpr int kSideTo[3] = {kCornerAB, kCornerBC, kCornerCA};

}  // namespace

TilingPatch build_tube(const Presentation& pres, const std::string& word, int thickness) {
  std::string w = reduce_word(word);
  if (w.empty()) throw std::invalid_argument("tube construction needs a nonempty word");
  if (thickness < 1) throw std::invalid_argument("tube thickness must be at least 1");
  const ElementTable& table = shared_table(pres);

  TilingPatch patch(pres);
  std::vector<Mat3<NFElem>> mats;  // exact matrix per tile, parallel to triangles

  auto add = [&](Mat3<NFElem> m, bool grey) {
    std::string id = ElementTable::id_of(m);
    auto it = patch.index_by_id.find(id);
    if (it != patch.index_by_id.end()) return it->second;
    int idx = static_cast<int>(patch.triangles.size());
    // Guards against runaway growth if the thickness doubling escalates.
    if (idx >= 300000) throw std::runtime_error("tube grew past the size guard");
    patch.index_by_id.emplace(id, idx);
    PatchTriangle t;
    t.id = std::move(id);
    t.grey = grey;
    patch.triangles.push_back(std::move(t));
    mats.push_back(std::move(m));
    return idx;
  };

  // Spine: prefixes of www.  The letter in a prefix acts after everything
  // before it, so its matrix multiplies on the left.
  patch.word_len = static_cast<int>(w.size());
  Mat3<NFElem> cur = table.identity();
  patch.spine.push_back(add(cur, true));
  std::string triple = w + w + w;
  for (size_t k = 0; k < triple.size(); ++k) {
    cur = table.generator(letter_index(triple[k])) * cur;
    patch.spine.push_back(add(cur, (k + 1) % 2 == 0));
  }

  // Every tile within combinatorial distance `thickness` of the spine.
  std::deque<int> bfs;
  std::vector<int> dist(patch.triangles.size(), 0);
  for (size_t i = 0; i < patch.triangles.size(); ++i) bfs.push_back(static_cast<int>(i));
  while (!bfs.empty()) {
    int i = bfs.front();
    bfs.pop_front();
    if (dist[i] >= thickness) continue;
    for (int s = 0; s < 3; ++s) {
      int j = add(table.generator(s) * mats[static_cast<size_t>(i)],
                  !patch.triangles[static_cast<size_t>(i)].grey);
      if (j == static_cast<int>(dist.size())) {  // newly added
        dist.push_back(dist[i] + 1);
        bfs.push_back(j);
      }
    }
  }

  // Adjacency: tile g meets g*s across the mirror labeled s.
  for (size_t i = 0; i < patch.triangles.size(); ++i)
    for (int s = 0; s < 3; ++s)
      patch.triangles[i].neighbor[static_cast<size_t>(s)] =
          patch.triangle_by_id(ElementTable::id_of(table.generator(s) * mats[i]));

  // Vertex classes: the dihedral group of the two mirrors at a corner glues
  // the corners of the tiles g*u, u in that dihedral group.  The class id is
  // the least member id; all orbit members are cached at once.
  std::array<std::vector<Mat3<NFElem>>, 3> dihedral;
  for (int c = 0; c < 3; ++c) {
    int x = kCornerLetters[c][0], y = kCornerLetters[c][1];
    int m = pres.order_of_pair(x, y);
    Mat3<NFElem> u = table.identity();
    dihedral[static_cast<size_t>(c)].push_back(u);
    for (int l = 1; l < 2 * m; ++l) {
      u = table.generator(l % 2 == 1 ? x : y) * u;  // alternating word
      dihedral[static_cast<size_t>(c)].push_back(u);
    }
  }

  auto corner_key = [](const std::string& id, int c) {
    return id + '|' + static_cast<char>('0' + c);
  };
  std::unordered_map<std::string, int> class_by_corner;
  std::unordered_map<std::string, int> class_by_canonical;
  for (size_t i = 0; i < patch.triangles.size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      auto it = class_by_corner.find(corner_key(patch.triangles[i].id, c));
      if (it != class_by_corner.end()) {
        patch.triangles[i].vertex[static_cast<size_t>(c)] = it->second;
        continue;
      }
      std::vector<std::string> members;
      for (const auto& u : dihedral[static_cast<size_t>(c)])
        members.push_back(ElementTable::id_of(u * mats[i]));
      std::string canonical = *std::min_element(members.begin(), members.end());
      std::string class_key = corner_key(canonical, c);
      auto [cit, inserted] =
          class_by_canonical.emplace(class_key, static_cast<int>(patch.vertex_ids.size()));
      if (inserted) patch.vertex_ids.push_back(class_key);
      for (const auto& mid : members) class_by_corner.emplace(corner_key(mid, c), cit->second);
      patch.triangles[i].vertex[static_cast<size_t>(c)] = cit->second;
    }
  }

  // Partial action g -> w*g.
  Mat3<NFElem> mw = table.evaluate(w);
  patch.action.resize(patch.triangles.size());
  for (size_t i = 0; i < patch.triangles.size(); ++i)
    patch.action[i] = patch.triangle_by_id(ElementTable::id_of(mats[i] * mw));

  return patch;
}

void edge_weights(TilingPatch& patch) {
  patch.edges.clear();
  for (int i = 0; i < static_cast<int>(patch.triangles.size()); ++i) {
    const PatchTriangle& t = patch.triangles[static_cast<size_t>(i)];
    for (int s = 0; s < 3; ++s) {
      int j = t.neighbor[static_cast<size_t>(s)];
      if (j >= 0 && j < i) continue;  // each geometric side once
      int u = t.vertex[static_cast<size_t>(kSideFrom[s])];
      int v = t.vertex[static_cast<size_t>(kSideTo[s])];
      if (j >= 0) {
        const PatchTriangle& o = patch.triangles[static_cast<size_t>(j)];
        if (o.grey == t.grey)
          throw std::runtime_error("adjacent tiles share a color; orientation data is broken");
        if (o.vertex[static_cast<size_t>(kSideFrom[s])] != u ||
            o.vertex[static_cast<size_t>(kSideTo[s])] != v)
          throw std::runtime_error("tiles at one side disagree on its endpoint vertex classes");
      }
      // from -> to is counterclockwise around the grey tile at this side
      // (weight 2); the white tile sees the same direction clockwise, and its
      // reversed rule produces the identical assignment.
      patch.edges.push_back({u, v, 2, i, s});
      patch.edges.push_back({v, u, 1, i, s});
    }
  }
}

namespace {

// Min over middle-spine vertex classes x of d(x, w*x) inside one finite tube.
int tube_min_displacement(const Presentation& pres, const std::string& w, int thickness) {
  TilingPatch patch = build_tube(pres, w, thickness);
  edge_weights(patch);
  int nv = static_cast<int>(patch.vertex_ids.size());
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(nv));
  for (const auto& e : patch.edges)
    adj[static_cast<size_t>(e.from)].push_back({e.to, e.weight});

  int n = patch.word_len;
  std::set<std::pair<int, int>> pairs;  // (source class, its image under w)
  for (int k = n; k <= 2 * n; ++k) {
    const PatchTriangle& g = patch.triangles[static_cast<size_t>(patch.spine[static_cast<size_t>(k)])];
    const PatchTriangle& wg =
        patch.triangles[static_cast<size_t>(patch.spine[static_cast<size_t>(k + n)])];
    for (int c = 0; c < 3; ++c)
      pairs.insert({g.vertex[static_cast<size_t>(c)], wg.vertex[static_cast<size_t>(c)]});
  }

  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<size_t>(nv));
  for (auto [src, dst] : pairs) {
    if (src == dst) return 0;
    std::fill(dist.begin(), dist.end(), std::numeric_limits<int>::max());
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    dist[static_cast<size_t>(src)] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
      auto [d, x] = pq.top();
      pq.pop();
      if (d > dist[static_cast<size_t>(x)] || d >= best) continue;
      if (x == dst) break;
      for (auto [y, wgt] : adj[static_cast<size_t>(x)])
        if (d + wgt < dist[static_cast<size_t>(y)]) {
          dist[static_cast<size_t>(y)] = d + wgt;
          pq.push({dist[static_cast<size_t>(y)], y});
        }
    }
    best = std::min(best, dist[static_cast<size_t>(dst)]);
  }
  return best;
}

}  // namespace

int translation_length(const Presentation& pres, const std::string& word) {
  std::string w = cyclic_reduce(word);
  if (w.empty()) return 0;
  // Thickness doubling until two successive tubes agree: paths through
  // partially developed boundary vertices are valid but possibly suboptimal,
  // so a stable value across a doubling is the convergence criterion.
  int prev = -1;
  int thickness = 1;
  for (int step = 0; step <= 12; ++step, thickness *= 2) {
    int cur = tube_min_displacement(pres, w, thickness);
    if (cur == prev) return cur;
    prev = cur;
  }
  throw std::runtime_error("translation length did not stabilize within the thickness cap");
}

DegreeLengthReport check_degree_length(const Presentation& pres, const std::string& word) {
  std::string w = reduce_word(word);
  if (w.size() % 2 != 0)
    throw std::invalid_argument("degree/length cross-check needs an orientation-preserving word");
  const SymbolicRep& sym = shared_symbolic(pres);
  LaurentPoly tr = sym.evaluate(w).trace();
  LaurentPoly tri = sym.evaluate(inverse_word(w)).trace();
  DegreeLengthReport rep;
  // An identically zero trace happens only for elliptic words (order-3
  // rotations); their degree contribution is zero like any constant trace.
  rep.d1 = tr.is_zero() ? 0 : tr.top_degree();
  rep.d2 = tri.is_zero() ? 0 : tri.top_degree();
  rep.length = translation_length(pres, w);
  rep.length_inverse = translation_length(pres, inverse_word(w));
  rep.consistent = rep.length == 3 * rep.d1 && rep.length_inverse == 3 * rep.d2;
  return rep;
}

}  // namespace trifins
