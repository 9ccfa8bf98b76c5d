#pragma once

#include <json.hpp>

#include "trifins/convex_body.hpp"
#include "trifins/gauge_ball.hpp"
#include "trifins/laurent.hpp"
#include "trifins/tiling.hpp"

namespace trifins {

// Exact Laurent data: [{"exponent": e, "coeff": ["p/q", ...]}, ...] sorted by
// exponent, coefficients as coordinates in the field basis.
nlohmann::json laurent_to_json(const LaurentPoly& poly);

// Polygon body: {"vertices": [[x, y], ...], "base": [x, y]}.
nlohmann::json body_to_json(const ConvexBody& body);
ConvexBody body_from_json(const nlohmann::json& j);

// Same layout as a polygon body with base fixed at the origin.
nlohmann::json gauge_to_json(const GaugeBall& ball);

// Debug/visualization dump: triangles with ids and colors, undirected sides,
// directed weighted edges between vertex classes.
nlohmann::json patch_to_json(const TilingPatch& patch);

}  // namespace trifins
