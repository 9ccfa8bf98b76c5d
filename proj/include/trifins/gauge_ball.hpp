#pragma once

#include <vector>

#include "trifins/planar.hpp"

namespace trifins {

// Convex polygon with the origin strictly inside, evaluated through its
// Minkowski gauge: gauge(v) = inf {s > 0 : v/s inside the polygon}.
class GaugeBall {
 public:
  static GaugeBall from_points(std::vector<Vec2> cloud);   // convex hull of a sample cloud
  static GaugeBall from_vertices(std::vector<Vec2> verts); // already convex, counterclockwise

  const std::vector<Vec2>& vertices() const { return verts_; }
  double gauge(Vec2 v) const;

 private:
  GaugeBall() = default;
  std::vector<Vec2> verts_;
};

// Symmetric positive-definite form [[a, b], [b, d]] on the plane.
struct BilinearForm {
  double a = 1.0, b = 0.0, d = 1.0;
  BilinearForm() = default;
  BilinearForm(double a_, double b_, double d_);
  double operator()(Vec2 u, Vec2 v) const {
    return u.x * (a * v.x + b * v.y) + u.y * (b * v.x + d * v.y);
  }
};

// Polar polygon {u : form(u, v) <= 1 for all v in the ball}; one dual vertex
// per primal edge.
GaugeBall polar_dual(const GaugeBall& ball, const BilinearForm& form);

}  // namespace trifins
