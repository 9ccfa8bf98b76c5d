#include "trifins/domain_shape.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace trifins {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
constexpr double kHalfRt3 = 0.86602540378443864676;

// Cube roots of unity as plane vectors.
const Vec2 kZeta[3] = {{1.0, 0.0}, {-0.5, kHalfRt3}, {-0.5, -kHalfRt3}};

struct TitState {
  double c[3];       // coefficients (1/3) e^{2 Re(zeta_k z)}
  Vec2 sigma;        // chart point P/H
  double height;     // H
  double jac[2][2];  // d sigma / d z  (z = x + i y as two real coordinates)
  Vec2 grad_h;       // d H / d z
};

TitState tit_state(Vec2 z) {
  TitState s{};
  double P1 = 0, P2 = 0, H = 0;
  double dP1[2] = {0, 0}, dP2[2] = {0, 0}, dH[2] = {0, 0};
  for (int k = 0; k < 3; ++k) {
    double a = kZeta[k].x, b = kZeta[k].y;
    double ck = std::exp(2.0 * (a * z.x - b * z.y)) / 3.0;
    s.c[k] = ck;
    P1 += ck * a;
    P2 += ck * b;
    H += ck;
    double dx = 2.0 * a * ck, dy = -2.0 * b * ck;
    dP1[0] += dx * a;
    dP1[1] += dy * a;
    dP2[0] += dx * b;
    dP2[1] += dy * b;
    dH[0] += dx;
    dH[1] += dy;
  }
  s.height = H;
  s.sigma = {P1 / H, P2 / H};
  for (int j = 0; j < 2; ++j) {
    s.jac[0][j] = (dP1[j] * H - P1 * dH[j]) / (H * H);
    s.jac[1][j] = (dP2[j] * H - P2 * dH[j]) / (H * H);
  }
  s.grad_h = {dH[0], dH[1]};
  return s;
}

// Invert the chart map sigma: find z with sigma(z) = u.  Near the origin
// sigma(z) is approximately conj(z), which seeds the Newton iteration.
TitState invert_chart(Vec2 u) {
  Vec2 z{u.x, -u.y};
  for (int iter = 0; iter < 80; ++iter) {
    TitState s = tit_state(z);
    Vec2 r = s.sigma - u;
    if (norm(r) <= 1e-14 * (1.0 + norm(u))) return s;
    double det = s.jac[0][0] * s.jac[1][1] - s.jac[0][1] * s.jac[1][0];
    if (det == 0) break;
    z = z - Vec2{(s.jac[1][1] * r.x - s.jac[0][1] * r.y) / det,
                 (s.jac[0][0] * r.y - s.jac[1][0] * r.x) / det};
  }
  throw std::runtime_error("chart point is outside the developing image");
}

}  // namespace

Lift flat_lift() {
  Lift l;
  l.point = [](Vec2 u) { return Vec3{u.x, u.y, 1.0}; };
  l.differential = [](Vec2, Vec2 v) { return Vec3{v.x, v.y, 0.0}; };
  return l;
}

Lift titeica_lift() {
  Lift l;
  l.point = [](Vec2 u) {
    TitState s = invert_chart(u);
    return Vec3{u.x * s.height, u.y * s.height, s.height};
  };
  l.differential = [](Vec2 u, Vec2 v) {
    TitState s = invert_chart(u);
    double det = s.jac[0][0] * s.jac[1][1] - s.jac[0][1] * s.jac[1][0];
    // dz = (d sigma)^{-1} v, then dh = grad H . dz by the chain rule.
    Vec2 dz{(s.jac[1][1] * v.x - s.jac[0][1] * v.y) / det,
            (s.jac[0][0] * v.y - s.jac[1][0] * v.x) / det};
    double dh = dot(s.grad_h, dz);
    return Vec3{v.x * s.height + u.x * dh, v.y * s.height + u.y * dh, dh};
  };
  return l;
}

double fds_eval(const ConvexBody& body, const Lift& lift, Vec2 x, Vec2 v) {
  if (v.x == 0 && v.y == 0) throw std::invalid_argument("tangent vector must be nonzero");
  AffineFunctional beta = support_functional(body, boundary_hit(body, x, -v));
  return beta(lift.differential(x, v)) / beta(lift.point(x));
}

double dds_eval(const ConvexBody& body, const Lift& lift, Vec2 x, Vec2 y) {
  if (x.x == y.x && x.y == y.y) return 0.0;
  AffineFunctional beta = support_functional(body, boundary_hit(body, y, x - y));
  return std::log(beta(lift.point(y)) / beta(lift.point(x)));
}

double hilbert_distance(const ConvexBody& body, Vec2 x, Vec2 y) {
  if (x.x == y.x && x.y == y.y) return 0.0;
  Vec2 p = boundary_hit(body, y, x - y);  // beyond x
  Vec2 q = boundary_hit(body, x, y - x);  // beyond y
  return std::log(norm(q - x) * norm(p - y) / (norm(q - y) * norm(p - x)));
}

TiteicaPoint titeica_point(std::complex<double> z) {
  TitState s = tit_state({z.real(), z.imag()});
  double P1 = s.sigma.x * s.height, P2 = s.sigma.y * s.height;
  return {Vec3{P1, P2, s.height}, {s.sigma.x, s.sigma.y}};
}

GaugeBall truncated_ball(double d, int samples) {
  if (!(d > 0)) throw std::invalid_argument("truncation radius must be positive");
  if (samples < 16) throw std::invalid_argument("need at least 16 samples");
  std::vector<Vec2> cloud;
  cloud.reserve(static_cast<size_t>(samples) * 16 + 1);
  cloud.push_back({0.0, 0.0});  // chart of z = 0
  for (int ring = 1; ring <= 16; ++ring) {
    double rr = d * ring / 16.0;
    for (int k = 0; k < samples; ++k) {
      double th = kTwoPi * k / samples;
      TiteicaPoint tp = titeica_point(std::polar(rr, th));
      cloud.push_back({-tp.chart.real(), -tp.chart.imag()});
    }
  }
  return GaugeBall::from_points(std::move(cloud));
}

}  // namespace trifins
