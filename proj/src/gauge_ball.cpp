#include "trifins/gauge_ball.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace trifins {

namespace {

// Monotone-chain hull; collinear boundary points are dropped so the result
// is strictly convex.  Counterclockwise order, starting at the lowest point.
std::vector<Vec2> hull_of(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }),
            pts.end());
  if (pts.size() < 3) throw std::invalid_argument("hull needs at least three distinct points");

  double span = 0.0;
  for (const Vec2& p : pts) span = std::max({span, std::abs(p.x), std::abs(p.y)});
  double eps = 1e-12 * span * span;

  auto build = [&](auto begin, auto end) {
    std::vector<Vec2> chain;
    for (auto it = begin; it != end; ++it) {
      while (chain.size() >= 2 &&
             cross(chain.back() - chain[chain.size() - 2], *it - chain.back()) <= eps)
        chain.pop_back();
      chain.push_back(*it);
    }
    return chain;
  };
  std::vector<Vec2> lower = build(pts.begin(), pts.end());
  std::vector<Vec2> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;
}

void validate_ball(const std::vector<Vec2>& v) {
  if (v.size() < 3) throw std::invalid_argument("gauge ball needs at least three vertices");
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = v[(i + 1) % n] - v[i];
    if (!(cross(e, v[(i + 2) % n] - v[(i + 1) % n]) > 0))
      throw std::invalid_argument("gauge ball must be strictly convex and counterclockwise");
    if (!(cross(e, Vec2{0.0, 0.0} - v[i]) > 0))
      throw std::invalid_argument("gauge ball must contain the origin strictly");
  }
}

}  // namespace

GaugeBall GaugeBall::from_points(std::vector<Vec2> cloud) {
  return from_vertices(hull_of(std::move(cloud)));
}

GaugeBall GaugeBall::from_vertices(std::vector<Vec2> verts) {
  validate_ball(verts);
  GaugeBall b;
  b.verts_ = std::move(verts);
  return b;
}

double GaugeBall::gauge(Vec2 v) const {
  size_t n = verts_.size();
  double best = 0.0;
  for (size_t i = 0; i < n; ++i) {
    Vec2 e = verts_[(i + 1) % n] - verts_[i];
    Vec2 nout{e.y, -e.x};
    best = std::max(best, dot(nout, v) / dot(nout, verts_[i]));
  }
  return best;
}

BilinearForm::BilinearForm(double a_, double b_, double d_) : a(a_), b(b_), d(d_) {
  if (!(a > 0) || !(a * d - b * b > 0))
    throw std::invalid_argument("bilinear form must be positive definite");
}

GaugeBall polar_dual(const GaugeBall& ball, const BilinearForm& form) {
  const std::vector<Vec2>& v = ball.vertices();
  size_t n = v.size();
  std::vector<Vec2> dual;
  dual.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    Vec2 p = v[i], q = v[(i + 1) % n];
    Vec2 w0{form.a * p.x + form.b * p.y, form.b * p.x + form.d * p.y};
    Vec2 w1{form.a * q.x + form.b * q.y, form.b * q.x + form.d * q.y};
    double det = cross(w0, w1);
    if (det == 0) throw std::runtime_error("degenerate primal edge in polar dual");
    // Intersection of the support lines form(u, p) = 1 and form(u, q) = 1.
    dual.push_back({(w1.y - w0.y) / det, (w0.x - w1.x) / det});
  }
  return GaugeBall::from_vertices(std::move(dual));
}

}  // namespace trifins
