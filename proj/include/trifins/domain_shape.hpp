#pragma once

#include <complex>
#include <functional>

#include "trifins/convex_body.hpp"
#include "trifins/gauge_ball.hpp"

namespace trifins {

// Convex lift over the plane: the chart point u maps to (u*h(u), h(u)) with
// h > 0, together with its differential.
struct Lift {
  std::function<Vec3(Vec2)> point;
  std::function<Vec3(Vec2, Vec2)> differential;  // derivative at u along v
};

Lift flat_lift();     // h == 1
Lift titeica_lift();  // the cubic-exponential affine sphere over its chart triangle

// Gauge of the tangent vector v at the interior point x: the supporting
// functional at the boundary hit opposite to v, applied to the lifted v and
// normalized by its value on the lifted x.
double fds_eval(const ConvexBody& body, const Lift& lift, Vec2 x, Vec2 v);

// One-sided distance log(beta(lift y)/beta(lift x)) with beta supporting at
// the boundary hit of the ray from y through x; zero when x == y.
double dds_eval(const ConvexBody& body, const Lift& lift, Vec2 x, Vec2 y);

// Cross-ratio length of the chord through x and y.
double hilbert_distance(const ConvexBody& body, Vec2 x, Vec2 y);

struct TiteicaPoint {
  Vec3 space;                  // (Re, Im, height) in C + R
  std::complex<double> chart;  // radial projection to height 1
};

// Sum over the cube roots z1 of unity of (1/3)e^{2 Re(z1 z)} (z1, 1).
TiteicaPoint titeica_point(std::complex<double> z);

// Negated convex hull of the chart projections over a sampled disk |z| <= d;
// its gauge decreases to the triangular norm at the cube parameter 1.
GaugeBall truncated_ball(double d, int samples);

}  // namespace trifins
