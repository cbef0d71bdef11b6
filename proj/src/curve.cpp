#include "earring/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace earring {

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

bool near_lattice(Vec2 v, Vec2* rounded) {
  Vec2 r{kTwoPi * std::round(v.x / kTwoPi), kTwoPi * std::round(v.y / kTwoPi)};
  if (rounded) *rounded = r;
  return norm(v - r) < 1e-6;
}

double smoothstep(double t) {
  t = std::clamp(t, 0.0, 1.0);
  return t * t * (3 - 2 * t);
}
double dsmoothstep(double t) {
  if (t <= 0 || t >= 1) return 0;
  return 6 * t * (1 - t);
}

}  // namespace

Vec2 PeriodLift::apply(long q, Vec2 x) const {
  if (eps == 1) return x + lambda * static_cast<double>(q);
  return (q % 2 == 0) ? x : lambda - x;
}

std::pair<Vec2, Vec2> PeriodLift::segment(long k) const {
  const long m = static_cast<long>(period());
  long q = floor_div(k, m), r = k - q * m;
  return {apply(q, pts[r]), apply(q, pts[r + 1])};
}

Vec2 PeriodLift::point(double param) const {
  long k = static_cast<long>(std::floor(param));
  double u = param - k;
  auto [a, b] = segment(k);
  return a + (b - a) * u;
}

PeriodLift period_lift(const Curve& c) {
  if (c.samples.size() < 2) throw std::invalid_argument("curve needs at least two samples");
  PeriodLift L;
  if (c.is_arc()) {
    const size_t n = c.samples.size();
    const Vec2 ce = c.samples.back(), cs = c.samples.front();
    L.pts = c.samples;
    for (size_t j = 1; j < n; ++j) L.pts.push_back(ce * 2 - c.samples[n - 1 - j]);
    L.eps = 1;
    L.lambda = (ce - cs) * 2;
    return L;
  }
  L.pts = c.samples;
  Vec2 lam;
  if (near_lattice(c.samples.back() - c.samples.front(), &lam)) {
    L.eps = 1;
  } else if (near_lattice(c.samples.back() + c.samples.front(), &lam)) {
    L.eps = -1;
  } else {
    throw std::invalid_argument("loop does not close up in the pillowcase");
  }
  L.lambda = lam;
  return L;
}

int corner_of(const Vec2& lift, double tol) {
  if (std::abs(std::sin(lift.x)) < tol && std::abs(std::sin(lift.y)) < tol) {
    auto p = normalize(lift);
    return p.corner_index ? *p.corner_index : -1;
  }
  return -1;
}

namespace {

void append_line(std::vector<Vec2>& out, Vec2 a, Vec2 b, double step) {
  int n = std::max(1, static_cast<int>(std::ceil(norm(b - a) / step)));
  for (int k = 1; k <= n; ++k) out.push_back(a + (b - a) * (static_cast<double>(k) / n));
}

}  // namespace

Curve make_segment_arc(Vec2 from, Vec2 to, double step) {
  Curve c;
  c.kind = CurveKind::Arc;
  c.samples.push_back(from);
  append_line(c.samples, from, to, step);
  c.samples.back() = to;
  c.start_corner = corner_of(from);
  c.end_corner = corner_of(to);
  if (c.start_corner < 0 || c.end_corner < 0) throw std::invalid_argument("arc endpoints must be corners");
  return c;
}

Curve make_slope_arc(double p, double q, double step) { return make_segment_arc({0, 0}, {p * kPi, q * kPi}, step); }

Curve make_circle(Vec2 center, double r, double step, bool ccw) {
  int n = std::max(8, static_cast<int>(std::ceil(kTwoPi * r / step)));
  Curve c;
  for (int k = 0; k <= n; ++k) {
    double a = (ccw ? 1 : -1) * kTwoPi * k / n;
    c.samples.push_back(center + Vec2{std::cos(a), std::sin(a)} * r);
  }
  c.samples.back() = c.samples.front();
  return c;
}

Curve make_line_loop(Vec2 start, Vec2 lambda, double step) {
  Curve c;
  c.samples.push_back(start);
  append_line(c.samples, start, start + lambda, step);
  c.samples.back() = start + lambda;
  return c;
}

Curve make_polyline(std::vector<Vec2> pts, CurveKind kind, double step) {
  Curve c;
  c.kind = kind;
  c.samples.push_back(pts.front());
  for (size_t k = 1; k < pts.size(); ++k) append_line(c.samples, pts[k - 1], pts[k], step);
  if (kind == CurveKind::Arc) {
    c.start_corner = corner_of(c.samples.front());
    c.end_corner = corner_of(c.samples.back());
  }
  return c;
}

Curve make_param_loop(const std::function<Vec2(double)>& f, int n) {
  Curve c;
  for (int k = 0; k <= n; ++k) c.samples.push_back(f(static_cast<double>(k) / n));
  finalize_loop(c);
  return c;
}

void finalize_loop(Curve& c) {
  c.kind = CurveKind::Loop;
  (void)period_lift(c);
}

Curve reversed(const Curve& c) {
  Curve r = c;
  std::reverse(r.samples.begin(), r.samples.end());
  std::swap(r.start_corner, r.end_corner);
  r.orientation = !c.orientation;
  return r;
}

Curve translated(const Curve& c, Vec2 v) {
  Curve r = c;
  for (auto& p : r.samples) p = p + v;
  return r;
}

Curve resampled(const Curve& c, double step) {
  Curve r = c;
  r.samples = {c.samples.front()};
  for (size_t k = 1; k < c.samples.size(); ++k) append_line(r.samples, c.samples[k - 1], c.samples[k], step);
  return r;
}

double curve_length(const Curve& c) {
  double s = 0;
  for (size_t k = 1; k < c.samples.size(); ++k) s += norm(c.samples[k] - c.samples[k - 1]);
  return s;
}

double max_step(const Curve& c) {
  double s = 0;
  for (size_t k = 1; k < c.samples.size(); ++k) s = std::max(s, norm(c.samples[k] - c.samples[k - 1]));
  return s;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 d = b - a;
  double l2 = dot(d, d);
  double u = l2 > 0 ? std::clamp(dot(p - a, d) / l2, 0.0, 1.0) : 0.0;
  return norm(p - (a + d * u));
}

double point_curve_distance(Vec2 p, const Curve& c) {
  double best = 1e300;
  for (size_t k = 1; k < c.samples.size(); ++k) {
    Vec2 a = c.samples[k - 1], b = c.samples[k];
    Vec2 q = nearest_rep(p, (a + b) * 0.5);
    best = std::min(best, point_segment_distance(q, a, b));
  }
  return best;
}

double hausdorff(const Curve& a, const Curve& b) {
  double h = 0;
  for (const auto& p : a.samples) h = std::max(h, point_curve_distance(p, b));
  for (const auto& p : b.samples) h = std::max(h, point_curve_distance(p, a));
  return h;
}

CurveTracker::CurveTracker(const Curve& c, long seg_hint) : lift_(period_lift(c)), seg_(seg_hint) {}

double CurveTracker::signed_distance(Vec2 x, Vec2* grad) {
  long best = seg_;
  double bd = 1e300;
  for (long k = seg_ - 4; k <= seg_ + 4; ++k) {
    auto [a, b] = lift_.segment(k);
    double d = point_segment_distance(x, a, b);
    if (d < bd - 1e-15) {
      bd = d;
      best = k;
    }
  }
  seg_ = best;

  struct Lin {
    Vec2 a, d, n;
    double len;
  };
  auto lin = [&](long k) {
    auto [a, b] = lift_.segment(k);
    double len = norm(b - a);
    Vec2 d = (b - a) * (1 / len);
    return Lin{a, d, Vec2{-d.y, d.x}, len};
  };
  auto sd = [](const Lin& L, Vec2 p) { return dot(L.n, p - L.a); };

  Lin cur = lin(seg_);
  double u = std::clamp(dot(cur.d, x - cur.a) / cur.len, 0.0, 1.0);
  param_ = static_cast<double>(seg_) + u;

  // joint blending between segments k and k+1 around their common vertex
  auto blended = [&](const Lin& L1, const Lin& L2, double* out, Vec2* g) {
    Vec2 v = L2.a;
    Vec2 t = L1.d + L2.d;
    double tn = norm(t);
    if (tn < 1e-12) return false;
    t = t * (1 / tn);
    double r = 0.25 * std::min(L1.len, L2.len);
    double tau = dot(x - v, t);
    if (std::abs(tau) >= r) return false;
    double z = (tau + r) / (2 * r);
    double w = smoothstep(z), dw = dsmoothstep(z) / (2 * r);
    double s1 = sd(L1, x), s2 = sd(L2, x);
    *out = (1 - w) * s1 + w * s2;
    if (g) *g = L1.n * (1 - w) + L2.n * w + t * ((s2 - s1) * dw);
    return true;
  };
  double val;
  Vec2 g;
  if (blended(lin(seg_ - 1), cur, &val, &g) || blended(cur, lin(seg_ + 1), &val, &g)) {
    if (grad) *grad = g;
    return val;
  }
  if (grad) *grad = cur.n;
  return sd(cur, x);
}

}  // namespace earring
