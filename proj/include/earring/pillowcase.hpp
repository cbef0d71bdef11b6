#pragma once

#include <array>
#include <numbers>
#include <optional>

#include "earring/quat.hpp"

namespace earring {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2 * std::numbers::pi;

struct Vec2 {
  double x = 0, y = 0;
  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double t) const { return {x * t, y * t}; }
  Vec2 operator-() const { return {-x, -y}; }
  bool operator==(const Vec2&) const = default;
};
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Vec2& a) { return std::hypot(a.x, a.y); }

// torus coordinates of the four corners, indexed 0..3
inline constexpr std::array<Vec2, 4> kCorners{Vec2{0, 0}, Vec2{0, kPi}, Vec2{kPi, 0}, Vec2{kPi, kPi}};

struct PillPoint {
  double gamma = 0;
  double theta = 0;
  std::optional<int> corner_index;

  Vec2 lift() const { return {gamma, theta}; }
};

struct TracelessTriple {
  Quat b, f, a;
};

PillPoint normalize(double gamma, double theta);
inline PillPoint normalize(const Vec2& v) { return normalize(v.x, v.y); }

std::array<double, 3> embed3(const PillPoint& p);

PillPoint triple_to_pillowcase(const TracelessTriple& t, double tol = 1e-8);
TracelessTriple pillowcase_to_triple(const PillPoint& p);

double dist(const PillPoint& p1, const PillPoint& p2);

// torus helpers
double wrap_pi(double a);                  // to (-pi, pi]
Vec2 nearest_rep(const Vec2& p, const Vec2& ref);  // the lift of [p] (over ±p + 2piZ^2) closest to ref
double torus_dist(const Vec2& a, const Vec2& b);   // flat distance on R^2/2piZ^2
double corner_distance(const Vec2& p);     // distance in P to the nearest corner
double corner_margin(const PillPoint& p);  // sin^2 gamma + sin^2 theta

}  // namespace earring
