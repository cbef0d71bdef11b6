#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "earring/pillowcase.hpp"

namespace earring {

enum class CurveKind { Loop, Arc };

// An oriented PL curve in P stored as one period of a torus lift.
// Loops: samples.back() = T(samples.front()) with T(x) = eps*x + lambda.
// Arcs: samples.front() and samples.back() are corner lifts.
struct Curve {
  CurveKind kind = CurveKind::Loop;
  std::vector<Vec2> samples;
  int start_corner = -1, end_corner = -1;
  bool orientation = true;  // false when the stored order was reversed from the input

  bool is_arc() const { return kind == CurveKind::Arc; }
  size_t segments() const { return samples.empty() ? 0 : samples.size() - 1; }
};

// Period data of the closed torus curve traced by a P-curve.
// Arcs are unfolded through their end corners, so the lift is the
// arc followed by its point reflection at the end corner.
struct PeriodLift {
  std::vector<Vec2> pts;  // one period, pts.back() = T(pts.front())
  int eps = 1;
  Vec2 lambda;

  Vec2 apply(long q, Vec2 x) const;  // T^q
  size_t period() const { return pts.size() - 1; }
  std::pair<Vec2, Vec2> segment(long k) const;  // any integer index
  Vec2 point(double param) const;               // param in segment units
};

PeriodLift period_lift(const Curve& c);

int corner_of(const Vec2& lift, double tol = 1e-9);

// constructors
Curve make_segment_arc(Vec2 from, Vec2 to, double step = 0.02);
Curve make_slope_arc(double p, double q, double step = 0.02);  // t -> [p t, q t], t in [0, pi]
Curve make_circle(Vec2 center, double r, double step = 0.02, bool ccw = true);
Curve make_line_loop(Vec2 start, Vec2 lambda, double step = 0.02);
Curve make_polyline(std::vector<Vec2> pts, CurveKind kind, double step = 0.02);
Curve make_param_loop(const std::function<Vec2(double)>& f, int n);  // f on [0,1], f(1) ~ T f(0)

Curve reversed(const Curve& c);
Curve translated(const Curve& c, Vec2 v);
Curve resampled(const Curve& c, double step);
void finalize_loop(Curve& c);  // validates closure

double curve_length(const Curve& c);
double max_step(const Curve& c);

// distances in P
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);
double point_curve_distance(Vec2 p, const Curve& c);  // over all lifts
double hausdorff(const Curve& a, const Curve& b);

// Signed distance to a curve near a moving point, C^1 across joints.
class CurveTracker {
 public:
  CurveTracker(const Curve& c, long seg_hint = 0);
  // signed distance (left of the direction of travel is positive) and its gradient
  double signed_distance(Vec2 x, Vec2* grad = nullptr);
  double param() const { return param_; }  // global parameter in segment units
  long segment() const { return seg_; }
  const PeriodLift& lift() const { return lift_; }
  void set_segment(long k) { seg_ = k; }

 private:
  PeriodLift lift_;
  long seg_;
  double param_ = 0;
};

}  // namespace earring
