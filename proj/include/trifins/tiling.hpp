#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "trifins/triangle_group.hpp"

namespace trifins {

// Corner types of a tile, named by the two mirrors that cross there.  The
// order AB, BC, CA is the counterclockwise corner order of grey tiles (white
// tiles, their mirror images, carry the reverse orientation).
enum CornerType { kCornerAB = 0, kCornerBC = 1, kCornerCA = 2 };

struct PatchTriangle {
  std::string id;                           // canonical element id
  bool grey = false;                        // orientation-preserving (even) elements
  std::array<int, 3> neighbor{-1, -1, -1};  // across sides a, b, c; -1 = outside patch
  std::array<int, 3> vertex{-1, -1, -1};    // vertex-class index per corner type
};

struct DirectedEdge {
  int from = 0, to = 0;  // vertex-class indices
  int weight = 0;        // 1 or 2; the two directions over one side sum to 3
  int triangle = 0;      // one triangle bordering the underlying side
  int side = 0;          // generator index of the side
};

// Finite piece of the reflection tiling: tiles are group elements, the tile g
// meets g*s across the mirror labeled s, and tile corners are identified into
// vertex classes by the dihedral group of the two mirrors at the corner.
struct TilingPatch {
  explicit TilingPatch(const Presentation& p) : pres(p) {}

  Presentation pres;
  std::vector<PatchTriangle> triangles;
  std::unordered_map<std::string, int> index_by_id;
  std::vector<std::string> vertex_ids;  // canonical (least member) id per class
  std::vector<DirectedEdge> edges;      // filled by edge_weights
  std::vector<int> spine;               // triangle indices of the tripled letter path
  int word_len = 0;
  std::vector<int> action;  // triangle index of w * g, -1 when outside the patch

  int triangle_by_id(const std::string& id) const;
};

// Tube around the letter path of w repeated three times: the spine triangles
// are the prefixes of www, plus every tile within combinatorial distance
// `thickness` of the spine.  Also records the (partial) action g -> w*g.
TilingPatch build_tube(const Presentation& pres, const std::string& word, int thickness);

// Assigns both directed weights to every geometric side: traversal
// counterclockwise around the adjacent grey tile weighs 2, clockwise 1 (and
// the reverse around white tiles, which is the same assignment).  Verifies
// color alternation and that the two tiles at a side agree on its endpoint
// vertex classes; throws std::runtime_error on any inconsistency.
void edge_weights(TilingPatch& patch);

// Weighted shortest-path translation length of the word on the reflection
// locus: min over vertex classes x on the middle third of the spine of
// d(x, w*x), with tube thickness doubling until two successive values agree.
// Conjugation-invariant (the word is cyclically reduced internally); 0 for
// elliptic words.  Throws std::runtime_error if the length does not
// stabilize within the doubling cap.
int translation_length(const Presentation& pres, const std::string& word);

struct DegreeLengthReport {
  int d1 = 0;              // top degree in t of the trace of the word
  int d2 = 0;              // top degree for the inverse word
  int length = 0;          // translation length of the word
  int length_inverse = 0;  // translation length of the inverse word
  bool consistent = false; // length == 3*d1 and length_inverse == 3*d2
};

// Cross-check of the two length computations (trace degrees vs combinatorial
// shortest paths) for an orientation-preserving word.
DegreeLengthReport check_degree_length(const Presentation& pres, const std::string& word);

}  // namespace trifins
