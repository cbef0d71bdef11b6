#include "earring/pillowcase.hpp"

#include <algorithm>
#include <cmath>

#include "earring/errors.hpp"

namespace earring {

namespace {

double mod2pi(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r -= kTwoPi;
  return r;
}

}  // namespace

double wrap_pi(double a) {
  double r = mod2pi(a);
  return r > kPi ? r - kTwoPi : r;
}

PillPoint normalize(double gamma, double theta) {
  double g = mod2pi(gamma), t = mod2pi(theta);
  if (g > kPi) {
    g = kTwoPi - g;
    t = mod2pi(-t);
  }
  constexpr double edge = 1e-12;
  if ((g < edge || kPi - g < edge) && t > kPi) t = kTwoPi - t;
  PillPoint p{g, t, std::nullopt};
  if (std::abs(std::sin(g)) < 1e-9 && std::abs(std::sin(t)) < 1e-9) {
    int gi = std::abs(g - kPi) < 0.5 ? 1 : 0;
    int ti = std::abs(t - kPi) < 0.5 ? 1 : 0;
    p.corner_index = 2 * gi + ti;
  }
  return p;
}

std::array<double, 3> embed3(const PillPoint& p) {
  return {std::cos(p.gamma), std::cos(p.theta), std::cos(p.gamma - p.theta)};
}

PillPoint triple_to_pillowcase(const TracelessTriple& t, double tol) {
  if (std::abs(re(t.b * t.a * conj(t.f))) > tol) throw InvalidTriple("re(b a conj(f)) too large");
  const ImQuat A = im(t.a), B = im(t.b), F = im(t.f);
  const ImQuat n1 = cross(A, B), n2 = cross(A, F);
  ImQuat n = n1.norm() >= n2.norm() ? n1 : n2;
  const double nn = n.norm();
  if (nn < 1e-14) {
    double g = std::acos(std::clamp(dot(A, B), -1.0, 1.0));
    double th = std::acos(std::clamp(dot(A, F), -1.0, 1.0));
    return normalize(g, th);
  }
  n = n * (1 / nn);
  double g = std::atan2(dot(n, cross(A, B)), dot(A, B));
  double th = std::atan2(dot(n, cross(A, F)), dot(A, F));
  return normalize(g, th);
}

TracelessTriple pillowcase_to_triple(const PillPoint& p) {
  return {exp_k(p.gamma) * kI, exp_k(p.theta) * kI, kI};
}

Vec2 nearest_rep(const Vec2& p, const Vec2& ref) {
  Vec2 best{};
  double bd = 1e300;
  for (int s : {1, -1}) {
    Vec2 q = p * s;
    Vec2 r{q.x + kTwoPi * std::round((ref.x - q.x) / kTwoPi), q.y + kTwoPi * std::round((ref.y - q.y) / kTwoPi)};
    double d = norm(r - ref);
    if (d < bd) {
      bd = d;
      best = r;
    }
  }
  return best;
}

double torus_dist(const Vec2& a, const Vec2& b) { return std::hypot(wrap_pi(a.x - b.x), wrap_pi(a.y - b.y)); }

double dist(const PillPoint& p1, const PillPoint& p2) {
  Vec2 a = p1.lift(), b = p2.lift();
  return std::min(torus_dist(a, b), torus_dist(a, -b));
}

double corner_distance(const Vec2& p) {
  double d = 1e300;
  for (const auto& c : kCorners) d = std::min(d, torus_dist(p, c));
  return d;
}

double corner_margin(const PillPoint& p) {
  double a = std::sin(p.gamma), b = std::sin(p.theta);
  return a * a + b * b;
}

}  // namespace earring
