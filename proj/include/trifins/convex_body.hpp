#pragma once

#include <functional>
#include <vector>

#include "trifins/planar.hpp"

namespace trifins {

// Smooth boundary description: a parametrization with period 2*pi and an
// outward-normal evaluator at boundary points.
struct SmoothOracle {
  std::function<Vec2(double)> point;
  std::function<Vec2(Vec2)> outward_normal;
};

// Convex planar domain, either an explicit polygon (counterclockwise and
// strictly convex) or a smooth oracle, with a marked interior base point.
class ConvexBody {
 public:
  static ConvexBody polygon(std::vector<Vec2> vertices, Vec2 base);
  static ConvexBody smooth(SmoothOracle oracle, Vec2 base);
  static ConvexBody ellipse(double a, double b);  // axis-aligned, base at the center
  static ConvexBody disk() { return ellipse(1.0, 1.0); }

  bool is_polygon() const { return !verts_.empty(); }
  const std::vector<Vec2>& vertices() const { return verts_; }
  const SmoothOracle& oracle() const { return oracle_; }
  Vec2 base() const { return base_; }

 private:
  ConvexBody() = default;
  std::vector<Vec2> verts_;
  SmoothOracle oracle_;
  Vec2 base_;
};

// beta(u1, u2, h) = n1*u1 + n2*u2 + c*h on lifted 3-space.
struct AffineFunctional {
  double n1 = 0.0, n2 = 0.0, c = 0.0;
  double operator()(const Vec3& p) const { return n1 * p.x + n2 * p.y + c * p.z; }
};

// First boundary point on the ray x + s*dir, s > 0.
Vec2 boundary_hit(const ConvexBody& body, Vec2 x, Vec2 dir);

// Supporting functional vanishing on the lifted supporting line at the
// boundary point p and positive on the interior.  At a polygon vertex the
// incoming edge is used; downstream values do not depend on the choice.
AffineFunctional support_functional(const ConvexBody& body, Vec2 p);

}  // namespace trifins
