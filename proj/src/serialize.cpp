#include "trifins/serialize.hpp"

#include <stdexcept>

namespace trifins {

using nlohmann::json;

json laurent_to_json(const LaurentPoly& poly) {
  json out = json::array();
  for (const auto& [exp, coeff] : poly.terms()) {  // map iteration: ascending exponent
    json coords = json::array();
    for (const Rational& q : coeff.coords()) coords.push_back(rational_to_string(q));
    out.push_back({{"exponent", exp}, {"coeff", coords}});
  }
  return out;
}

json body_to_json(const ConvexBody& body) {
  if (!body.is_polygon())
    throw std::invalid_argument("only polygon bodies have a serialized form");
  json verts = json::array();
  for (const Vec2& v : body.vertices()) verts.push_back({v.x, v.y});
  return {{"vertices", verts}, {"base", {body.base().x, body.base().y}}};
}

ConvexBody body_from_json(const json& j) {
  if (!j.contains("vertices") || !j.contains("base"))
    throw std::invalid_argument("polygon JSON needs \"vertices\" and \"base\"");
  std::vector<Vec2> verts;
  for (const auto& v : j.at("vertices"))
    verts.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  const auto& b = j.at("base");
  return ConvexBody::polygon(std::move(verts), {b.at(0).get<double>(), b.at(1).get<double>()});
}

json gauge_to_json(const GaugeBall& ball) {
  json verts = json::array();
  for (const Vec2& v : ball.vertices()) verts.push_back({v.x, v.y});
  return {{"vertices", verts}, {"base", {0.0, 0.0}}};
}

json patch_to_json(const TilingPatch& patch) {
  json tris = json::array();
  for (const PatchTriangle& t : patch.triangles) {
    tris.push_back({{"id", t.id},
                    {"grey", t.grey},
                    {"vertices", {t.vertex[0], t.vertex[1], t.vertex[2]}}});
  }
  json sides = json::array();
  for (size_t i = 0; i < patch.triangles.size(); ++i) {
    for (int s = 0; s < 3; ++s) {
      int j = patch.triangles[i].neighbor[static_cast<size_t>(s)];
      if (j > static_cast<int>(i)) sides.push_back({i, j, s});
    }
  }
  json edges = json::array();
  for (const DirectedEdge& e : patch.edges)
    edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", e.weight}});
  return {{"triangles", tris},
          {"sides", sides},
          {"edges", edges},
          {"vertex_count", patch.vertex_ids.size()}};
}

}  // namespace trifins
