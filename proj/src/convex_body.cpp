#include "trifins/convex_body.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace trifins {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void validate_polygon(const std::vector<Vec2>& v, Vec2 base) {
  if (v.size() < 3) throw std::invalid_argument("polygon needs at least three vertices");
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 e0 = v[(i + 1) % n] - v[i];
    Vec2 e1 = v[(i + 2) % n] - v[(i + 1) % n];
    if (!(cross(e0, e1) > 0))
      throw std::invalid_argument("polygon must be strictly convex and counterclockwise");
    if (!(cross(e0, base - v[i]) > 0))
      throw std::invalid_argument("base point must be strictly interior");
  }
}

}  // namespace

ConvexBody ConvexBody::polygon(std::vector<Vec2> vertices, Vec2 base) {
  validate_polygon(vertices, base);
  ConvexBody b;
  b.verts_ = std::move(vertices);
  b.base_ = base;
  return b;
}

ConvexBody ConvexBody::smooth(SmoothOracle oracle, Vec2 base) {
  if (!oracle.point || !oracle.outward_normal)
    throw std::invalid_argument("smooth body needs boundary and normal evaluators");
  // Sampled star-shape check: the base lies strictly on the inner side of
  // every sampled tangent line.
  for (int k = 0; k < 64; ++k) {
    Vec2 p = oracle.point(kTwoPi * k / 64.0);
    if (dot(oracle.outward_normal(p), base - p) >= 0)
      throw std::invalid_argument("base point must be strictly interior");
  }
  ConvexBody b;
  b.oracle_ = std::move(oracle);
  b.base_ = base;
  return b;
}

ConvexBody ConvexBody::ellipse(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw std::invalid_argument("ellipse semi-axes must be positive");
  SmoothOracle o;
  o.point = [a, b](double th) { return Vec2{a * std::cos(th), b * std::sin(th)}; };
  o.outward_normal = [a, b](Vec2 p) {
    Vec2 n{p.x / (a * a), p.y / (b * b)};
    return (1.0 / norm(n)) * n;
  };
  return smooth(std::move(o), Vec2{0.0, 0.0});
}

Vec2 boundary_hit(const ConvexBody& body, Vec2 x, Vec2 dir) {
  if (dir.x == 0 && dir.y == 0)
    throw std::invalid_argument("boundary hit needs a nonzero direction");

  if (body.is_polygon()) {
    const std::vector<Vec2>& v = body.vertices();
    size_t n = v.size();
    double best = std::numeric_limits<double>::infinity();
    Vec2 hit{};
    for (size_t i = 0; i < n; ++i) {
      Vec2 a = v[i];
      Vec2 e = v[(i + 1) % n] - a;
      double den = cross(dir, e);
      if (den == 0) continue;  // ray parallel to this edge
      double s = cross(a - x, e) / den;
      double u = cross(a - x, dir) / den;
      if (s > 0 && u >= -1e-12 && u <= 1 + 1e-12 && s < best) {
        best = s;
        hit = a + u * e;
      }
    }
    if (!(best < std::numeric_limits<double>::infinity()))
      throw std::invalid_argument("ray does not leave through the boundary; x must be interior");
    return hit;
  }

  // Smooth oracle: locate the parameter where the boundary crosses the ray
  // line on the forward side, then bisect the crossing.
  const SmoothOracle& o = body.oracle();
  const int kScan = 512;
  auto side = [&](double th) { return cross(dir, o.point(th) - x); };
  double prev_th = 0.0, prev_f = side(0.0);
  for (int k = 1; k <= kScan; ++k) {
    double th = kTwoPi * k / kScan;
    double f = side(th);
    bool crossing = (prev_f <= 0 && f > 0) || (prev_f >= 0 && f < 0) || prev_f == 0;
    if (crossing) {
      Vec2 mid = o.point(0.5 * (prev_th + th));
      if (dot(dir, mid - x) > 0) {
        double lo = prev_th, hi = th, flo = prev_f;
        while (hi - lo > 1e-12) {
          double mth = 0.5 * (lo + hi);
          double fm = side(mth);
          if ((flo <= 0) == (fm <= 0)) {
            lo = mth;
            flo = fm;
          } else {
            hi = mth;
          }
        }
        return o.point(0.5 * (lo + hi));
      }
    }
    prev_th = th;
    prev_f = f;
  }
  throw std::invalid_argument("ray does not leave through the boundary; x must be interior");
}

AffineFunctional support_functional(const ConvexBody& body, Vec2 p) {
  if (body.is_polygon()) {
    const std::vector<Vec2>& v = body.vertices();
    size_t n = v.size();
    size_t edge = n;
    // A vertex hit resolves to its incoming edge; any supporting line there
    // yields the same downstream values.
    for (size_t i = 0; i < n; ++i) {
      if (norm(p - v[i]) <= 1e-9) {
        edge = (i + n - 1) % n;
        break;
      }
    }
    for (size_t i = 0; i < n && edge == n; ++i) {
      Vec2 a = v[i];
      Vec2 e = v[(i + 1) % n] - a;
      double len = norm(e);
      double off = std::abs(cross(e, p - a)) / len;
      double t = dot(p - a, e) / (len * len);
      if (off <= 1e-9 && t >= -1e-9 && t <= 1 + 1e-9) edge = i;
    }
    if (edge == n) throw std::invalid_argument("point is not on the boundary");
    Vec2 a = v[edge];
    Vec2 e = v[(edge + 1) % n] - a;
    Vec2 nin{-e.y, e.x};  // inward for counterclockwise order
    nin = (1.0 / norm(nin)) * nin;
    return {nin.x, nin.y, -dot(nin, a)};
  }

  // Boundary membership via the ray from the base through p.
  Vec2 onb = boundary_hit(body, body.base(), p - body.base());
  if (norm(onb - p) > 1e-9 * (1.0 + norm(p)))
    throw std::invalid_argument("point is not on the boundary");
  Vec2 nout = body.oracle().outward_normal(p);
  double nn = norm(nout);
  if (nn == 0) throw std::invalid_argument("degenerate oracle normal");
  Vec2 nin = (-1.0 / nn) * nout;
  return {nin.x, nin.y, -dot(nin, p)};
}

}  // namespace trifins
