#include "earring/topology.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "earring/errors.hpp"

namespace earring {

namespace {

struct Seg {
  Vec2 a, b;
  int index;
  int sheet;  // +1 the stored lift, -1 its iota image
};

Vec2 mod_lattice(Vec2 p) {
  return {p.x - kTwoPi * std::floor(p.x / kTwoPi), p.y - kTwoPi * std::floor(p.y / kTwoPi)};
}

// bucket grid on the torus for the preimage of a curve
class TorusGrid {
 public:
  static constexpr int N = 32;
  explicit TorusGrid(std::vector<Seg> segs) : segs_(std::move(segs)), cells_(N * N) {
    for (size_t k = 0; k < segs_.size(); ++k) {
      Vec2 shift = mod_lattice(segs_[k].a) - segs_[k].a;
      segs_[k].a = segs_[k].a + shift;
      segs_[k].b = segs_[k].b + shift;
      for_cells(segs_[k].a, segs_[k].b, [&](int c) { cells_[c].push_back(static_cast<int>(k)); });
    }
  }

  template <class F>
  void query(Vec2 a, Vec2 b, F&& f) const {
    Vec2 shift = mod_lattice(a) - a;
    std::vector<int> seen;
    for_cells(a + shift, b + shift, [&](int c) {
      for (int k : cells_[c]) seen.push_back(k);
    });
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    for (int k : seen) f(segs_[k]);
  }

 private:
  template <class F>
  static void for_cells(Vec2 a, Vec2 b, F&& f) {
    const double h = kTwoPi / N;
    int x0 = static_cast<int>(std::floor((std::min(a.x, b.x) - 1e-6) / h));
    int x1 = static_cast<int>(std::floor((std::max(a.x, b.x) + 1e-6) / h));
    int y0 = static_cast<int>(std::floor((std::min(a.y, b.y) - 1e-6) / h));
    int y1 = static_cast<int>(std::floor((std::max(a.y, b.y) + 1e-6) / h));
    for (int i = x0; i <= x1; ++i)
      for (int j = y0; j <= y1; ++j) f(((i % N + N) % N) * N + ((j % N + N) % N));
  }

  std::vector<Seg> segs_;
  std::vector<std::vector<int>> cells_;
};

bool near_end(double u) { return std::abs(u) < 1e-9 || std::abs(u - 1) < 1e-9; }

struct Degenerate {};

IntersectionReport intersect_once(const Curve& c1, const std::vector<const Curve*>& c2s, Vec2 jitter) {
  std::vector<Seg> segs;
  int offset = 0;
  std::vector<int> offsets;
  for (const Curve* c2 : c2s) {
    offsets.push_back(offset);
    for (size_t k = 1; k < c2->samples.size(); ++k) {
      Vec2 a = c2->samples[k - 1] + jitter, b = c2->samples[k] + jitter;
      segs.push_back({a, b, offset + static_cast<int>(k - 1), 1});
      segs.push_back({-a, -b, offset + static_cast<int>(k - 1), -1});
    }
    offset += static_cast<int>(c2->samples.size());
  }
  TorusGrid grid(std::move(segs));
  IntersectionReport rep;
  for (size_t k = 1; k < c1.samples.size(); ++k) {
    const Vec2 a1 = c1.samples[k - 1], b1 = c1.samples[k];
    const Vec2 d1 = b1 - a1;
    grid.query(a1, b1, [&](const Seg& s) {
      Vec2 mid1 = (a1 + b1) * 0.5, mid2 = (s.a + s.b) * 0.5;
      Vec2 m{kTwoPi * std::round((mid1.x - mid2.x) / kTwoPi), kTwoPi * std::round((mid1.y - mid2.y) / kTwoPi)};
      Vec2 a2 = s.a + m, b2 = s.b + m, d2 = b2 - a2;
      double den = cross(d1, d2);
      double scale = norm(d1) * norm(d2);
      if (std::abs(den) < 1e-13 * scale) {
        if (std::abs(cross(d1, a2 - a1)) < 1e-12 * norm(d1)) {
          double t0 = dot(a2 - a1, d1) / dot(d1, d1), t1 = dot(b2 - a1, d1) / dot(d1, d1);
          if (std::max(t0, t1) > 0 && std::min(t0, t1) < 1) {
            if (corner_distance(a2) > 1e-6 || corner_distance(b2) > 1e-6) throw Degenerate{};
          }
        }
        return;
      }
      double u1 = cross(a2 - a1, d2) / den, u2 = cross(a2 - a1, d1) / den;
      const double e = 1e-9;
      if (u1 < -e || u1 > 1 + e || u2 < -e || u2 > 1 + e) return;
      Vec2 p = a1 + d1 * u1;
      if (corner_distance(p) < 1e-6) return;
      if (near_end(u1) || near_end(u2)) throw Degenerate{};
      if (u1 >= 1 || u2 >= 1 || u1 < 0 || u2 < 0) return;
      int sign = den > 0 ? 1 : -1;
      rep.points.push_back({static_cast<double>(k - 1) + u1, s.index + u2, sign, p});
    });
  }
  std::sort(rep.points.begin(), rep.points.end(),
            [](const IntersectionPoint& x, const IntersectionPoint& y) { return x.t1 < y.t1; });
  for (auto& p : rep.points) rep.algebraic += p.sign;
  rep.geometric = static_cast<int>(rep.points.size());
  (void)offsets;
  return rep;
}

}  // namespace

IntersectionReport intersection_number(const Curve& c1, const std::vector<Curve>& c2) {
  std::vector<const Curve*> ptrs;
  for (const auto& c : c2) ptrs.push_back(&c);
  const Vec2 dir{0.6, 0.8};
  for (int attempt = 0; attempt < 5; ++attempt) {
    try {
      return intersect_once(c1, ptrs, dir * (attempt * 1e-7));
    } catch (const Degenerate&) {
    }
  }
  throw NonTransverse("curves not transverse after jitter");
}

IntersectionReport intersection_number(const Curve& c1, const Curve& c2) {
  return intersection_number(c1, std::vector<Curve>{c2});
}

// ---------------------------------------------------------------- homology

namespace {

struct V3 {
  double x, y, z;
};
V3 unit(V3 v) {
  double n = std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
  return {v.x / n, v.y / n, v.z / n};
}
double dot3(V3 a, V3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace

Vec2 chart_point(const Vec2& p) {
  static const V3 N = unit({-1, -1, 1});
  static const V3 E1 = unit({1, -1, 0});
  static const V3 E2 = unit({1, 1, 2});  // N x E1 up to sign
  V3 u = unit({std::cos(p.x), std::cos(p.y), std::cos(p.x - p.y)});
  double den = 1 - dot3(u, N);
  return {dot3(u, E1) / den, dot3(u, E2) / den};
}

namespace {

double winding_increment(Vec2 a, Vec2 b, Vec2 w) { return std::atan2(cross(a - w, b - w), dot(a - w, b - w)); }

void accumulate(Vec2 ta, Vec2 tb, const std::array<Vec2, 3>& targets, std::array<double, 3>& acc, int depth) {
  Vec2 a = chart_point(ta), b = chart_point(tb);
  std::array<double, 3> inc;
  bool fine = true;
  for (int i = 0; i < 3; ++i) {
    inc[i] = winding_increment(a, b, targets[i]);
    if (std::abs(inc[i]) > 0.25) fine = false;
  }
  if (fine || depth > 24) {
    for (int i = 0; i < 3; ++i) acc[i] += inc[i];
    return;
  }
  Vec2 m = (ta + tb) * 0.5;
  accumulate(ta, m, targets, acc, depth + 1);
  accumulate(m, tb, targets, acc, depth + 1);
}

}  // namespace

HomologyClass homology_class(const Curve& loop) {
  auto L = period_lift(loop);
  const std::array<Vec2, 3> targets{chart_point(kCorners[0]), chart_point(kCorners[1]), chart_point(kCorners[2])};
  std::array<double, 3> acc{0, 0, 0};
  for (size_t k = 1; k < L.pts.size(); ++k) accumulate(L.pts[k - 1], L.pts[k], targets, acc, 0);
  // the chart reverses the dγ∧dθ orientation
  constexpr int sign = -1;
  return {sign * static_cast<int>(std::lround(acc[0] / kTwoPi)), sign * static_cast<int>(std::lround(acc[1] / kTwoPi)),
          sign * static_cast<int>(std::lround(acc[2] / kTwoPi))};
}

// ---------------------------------------------------------------- figure eights

namespace {

Vec2 rot90(Vec2 v) { return {-v.y, v.x}; }
Vec2 unit2(Vec2 v) { return v * (1 / norm(v)); }

Curve open_segment(Vec2 a, Vec2 b, double step = 0.01) {
  Curve c;
  c.kind = CurveKind::Arc;
  int n = std::max(2, static_cast<int>(std::ceil(norm(b - a) / step)));
  for (int k = 0; k <= n; ++k) c.samples.push_back(a + (b - a) * (static_cast<double>(k) / n));
  c.start_corner = corner_of(a);
  c.end_corner = corner_of(b);
  return c;
}

Vec2 point_at_length(const Curve& A, double s, Vec2* dir) {
  double acc = 0;
  for (size_t k = 1; k < A.samples.size(); ++k) {
    Vec2 d = A.samples[k] - A.samples[k - 1];
    double l = norm(d);
    if (acc + l >= s || k + 1 == A.samples.size()) {
      *dir = unit2(d);
      return A.samples[k - 1] + d * std::clamp((s - acc) / l, 0.0, 1.0);
    }
    acc += l;
  }
  *dir = {1, 0};
  return A.samples.front();
}

}  // namespace

Fig8TestArcs fig8_test_arcs(const Curve& A, double rho) {
  const auto& S = A.samples;
  Vec2 ds = unit2(S[1] - S[0]), de = unit2(S.back() - S[S.size() - 2]);
  Vec2 dm;
  Vec2 m = point_at_length(A, 0.5 * curve_length(A), &dm);
  Fig8TestArcs t;
  t.alpha_plus = open_segment(S.back(), S.back() + rot90(de) * rho);
  t.alpha_minus = open_segment(S.front(), S.front() + rot90(ds) * rho);
  t.beta = open_segment(m - rot90(dm) * rho, m + rot90(dm) * rho);
  return t;
}

Fig8Verdict classify_homology_fig8(const std::vector<Curve>& comps, const Curve& A, double rho) {
  for (const auto& c : comps)
    for (const auto& p : c.samples)
      if (point_curve_distance(p, A) > rho) throw SupportViolation("curve leaves the tube around the arc");
  auto t = fig8_test_arcs(A, rho);
  Fig8Verdict v;
  v.components = static_cast<int>(comps.size());
  v.is_connected = v.components == 1;
  v.alpha_plus = intersection_number(t.alpha_plus, comps);
  v.alpha_minus = intersection_number(t.alpha_minus, comps);
  v.beta = intersection_number(t.beta, comps);
  v.is_homology_fig8 = v.alpha_plus.geometric == 1 && v.alpha_minus.geometric == 1 &&
                       std::abs(v.alpha_plus.algebraic) == 1 && v.alpha_minus.algebraic == -v.alpha_plus.algebraic &&
                       v.beta.geometric == 2 && v.beta.algebraic == 0;
  return v;
}

// ---------------------------------------------------------------- bigons

namespace {

struct Crossing {
  int curve_a, curve_b;  // curve ids (0 or 1)
  double pa, pb;         // parameters along each curve
  Vec2 where;
};

struct Arrangement {
  // vertices: crossings and dangling ends
  std::vector<Vec2> vpos;
  std::vector<int> vkind;  // 0 = c1∩c2 crossing, 1 = self crossing, 2 = open end
  struct Half {
    int from, to, curve;
    std::vector<Vec2> poly;  // from -> to
    int twin = -1, next = -1;
    double angle = 0;
  };
  std::vector<Half> halves;
};

double poly_area(const std::vector<Vec2>& p) {
  double a = 0;
  for (size_t k = 0; k < p.size(); ++k) a += cross(p[k], p[(k + 1) % p.size()]);
  return 0.5 * a;
}

bool inside(const std::vector<Vec2>& poly, Vec2 q) {
  double w = 0;
  for (size_t k = 0; k < poly.size(); ++k) w += winding_increment(poly[k], poly[(k + 1) % poly.size()], q);
  return std::abs(w) > kPi;
}

}  // namespace

BigonReport count_bigons(const PlanarCurve& c1, const PlanarCurve& c2, const std::vector<Vec2>& punctures) {
  const std::array<const PlanarCurve*, 2> cs{&c1, &c2};
  auto nseg = [&](int c) { return static_cast<int>(cs[c]->pts.size()) - 1; };
  auto seg = [&](int c, int k) { return std::pair{cs[c]->pts[k], cs[c]->pts[k + 1]}; };

  std::vector<Crossing> xs;
  for (int ca = 0; ca < 2; ++ca)
    for (int cb = ca; cb < 2; ++cb)
      for (int i = 0; i < nseg(ca); ++i)
        for (int j = (ca == cb ? i + 1 : 0); j < nseg(cb); ++j) {
          if (ca == cb) {
            if (j == i + 1) continue;
            if (cs[ca]->closed && i == 0 && j == nseg(ca) - 1) continue;
          }
          auto [a1, b1] = seg(ca, i);
          auto [a2, b2] = seg(cb, j);
          Vec2 d1 = b1 - a1, d2 = b2 - a2;
          double den = cross(d1, d2);
          if (std::abs(den) < 1e-14 * norm(d1) * norm(d2)) {
            if (std::abs(cross(d1, a2 - a1)) < 1e-12 * norm(d1)) {
              double t0 = dot(a2 - a1, d1) / dot(d1, d1), t1 = dot(b2 - a1, d1) / dot(d1, d1);
              if (std::max(t0, t1) > 0 && std::min(t0, t1) < 1) throw NonSimpleArrangement("overlapping segments");
            }
            continue;
          }
          double u1 = cross(a2 - a1, d2) / den, u2 = cross(a2 - a1, d1) / den;
          const double e = 1e-9;
          if (u1 < -e || u1 > 1 + e || u2 < -e || u2 > 1 + e) continue;
          if (near_end(u1) || near_end(u2)) throw NonSimpleArrangement("crossing at a vertex");
          xs.push_back({ca, cb, i + u1, j + u2, a1 + d1 * u1});
        }
  for (size_t a = 0; a < xs.size(); ++a)
    for (size_t b = a + 1; b < xs.size(); ++b)
      if (norm(xs[a].where - xs[b].where) < 1e-12) throw NonSimpleArrangement("triple point");

  Arrangement ar;
  // per curve: ordered stops (param, vertex id)
  std::array<std::vector<std::pair<double, int>>, 2> stops;
  for (const auto& x : xs) {
    int v = static_cast<int>(ar.vpos.size());
    ar.vpos.push_back(x.where);
    ar.vkind.push_back(x.curve_a == x.curve_b ? 1 : 0);
    stops[x.curve_a].push_back({x.pa, v});
    stops[x.curve_b].push_back({x.pb, v});
  }
  std::vector<std::vector<Vec2>> free_loops;
  for (int c = 0; c < 2; ++c) {
    const auto& P = cs[c]->pts;
    if (!cs[c]->closed) {
      int v0 = static_cast<int>(ar.vpos.size());
      ar.vpos.push_back(P.front());
      ar.vkind.push_back(2);
      ar.vpos.push_back(P.back());
      ar.vkind.push_back(2);
      stops[c].push_back({0.0, v0});
      stops[c].push_back({static_cast<double>(nseg(c)), v0 + 1});
    }
    auto& st = stops[c];
    std::sort(st.begin(), st.end());
    if (st.empty()) {
      free_loops.push_back(P);
      continue;
    }
    auto point_at = [&](double t) {
      int k = std::min(static_cast<int>(std::floor(t)), nseg(c) - 1);
      return P[k] + (P[k + 1] - P[k]) * (t - k);
    };
    size_t count = cs[c]->closed ? st.size() : st.size() - 1;
    for (size_t s = 0; s < count; ++s) {
      auto [t0, v0] = st[s];
      auto [t1, v1] = st[(s + 1) % st.size()];
      if (cs[c]->closed && s + 1 == st.size()) t1 += nseg(c);
      std::vector<Vec2> poly{point_at(t0)};
      for (int k = static_cast<int>(std::floor(t0)) + 1; k < t1; ++k) poly.push_back(P[k % nseg(c)]);
      poly.push_back(point_at(t1 >= nseg(c) && cs[c]->closed ? t1 - nseg(c) : t1));
      poly.front() = ar.vpos[v0];
      poly.back() = ar.vpos[v1];
      Arrangement::Half h{v0, v1, c, poly};
      Arrangement::Half g{v1, v0, c, std::vector<Vec2>(poly.rbegin(), poly.rend())};
      int hi = static_cast<int>(ar.halves.size());
      h.twin = hi + 1;
      g.twin = hi;
      ar.halves.push_back(h);
      ar.halves.push_back(g);
    }
  }
  // angular order around vertices
  std::vector<std::vector<int>> out(ar.vpos.size());
  for (size_t k = 0; k < ar.halves.size(); ++k) {
    auto& h = ar.halves[k];
    Vec2 d = h.poly[1] - h.poly[0];
    h.angle = std::atan2(d.y, d.x);
    out[h.from].push_back(static_cast<int>(k));
  }
  for (auto& o : out)
    std::sort(o.begin(), o.end(), [&](int a, int b) { return ar.halves[a].angle < ar.halves[b].angle; });
  for (size_t k = 0; k < ar.halves.size(); ++k) {
    // face on the left: at the head, turn to the next edge clockwise from the twin
    int tw = ar.halves[k].twin;
    const auto& o = out[ar.halves[tw].from];
    auto it = std::find(o.begin(), o.end(), tw);
    size_t pos = static_cast<size_t>(it - o.begin());
    ar.halves[k].next = o[(pos + o.size() - 1) % o.size()];
  }
  BigonReport rep;
  for (auto k : ar.vkind) rep.crossings += (k == 0);
  std::vector<char> done(ar.halves.size(), 0);
  for (size_t k = 0; k < ar.halves.size(); ++k) {
    if (done[k]) continue;
    std::vector<int> cyc;
    for (int h = static_cast<int>(k); !done[h]; h = ar.halves[h].next) {
      done[h] = 1;
      cyc.push_back(h);
    }
    if (cyc.size() != 2) continue;
    const auto &h0 = ar.halves[cyc[0]], &h1 = ar.halves[cyc[1]];
    if (h0.curve == h1.curve) continue;
    if (ar.vkind[h0.from] != 0 || ar.vkind[h0.to] != 0) continue;
    std::vector<Vec2> poly(h0.poly.begin(), h0.poly.end() - 1);
    poly.insert(poly.end(), h1.poly.begin(), h1.poly.end() - 1);
    if (poly_area(poly) <= 0) continue;
    bool empty = true;
    for (const auto& p : punctures) empty = empty && !inside(poly, p);
    for (const auto& fl : free_loops) empty = empty && !inside(poly, fl.front());
    for (size_t j = 0; j < ar.halves.size() && empty; j += 2) {
      if (static_cast<int>(j) == cyc[0] || static_cast<int>(j) == cyc[1] || static_cast<int>(j + 1) == cyc[0] ||
          static_cast<int>(j + 1) == cyc[1])
        continue;
      const auto& pl = ar.halves[j].poly;
      Vec2 mid = pl.size() > 2 ? pl[pl.size() / 2] : (pl[0] + pl[1]) * 0.5;
      empty = !inside(poly, mid);
    }
    if (!empty) continue;
    ++rep.count;
    rep.corners.push_back({ar.vpos[h0.from], ar.vpos[h0.to]});
  }
  return rep;
}

int count_bigons(const Curve& c1, const Curve& c2) {
  auto planar = [](const Curve& c) {
    PlanarCurve p{c.samples, false};
    if (!c.is_arc() && norm(c.samples.front() - c.samples.back()) < 1e-12) {
      p.closed = true;
      p.pts.pop_back();
      p.pts.push_back(p.pts.front());
    }
    return p;
  };
  auto p1 = planar(c1), p2 = planar(c2);
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto* p : {&p1, &p2})
    for (const auto& q : p->pts) {
      x0 = std::min(x0, q.x);
      x1 = std::max(x1, q.x);
      y0 = std::min(y0, q.y);
      y1 = std::max(y1, q.y);
    }
  std::vector<Vec2> punct;
  for (int i = static_cast<int>(std::floor(x0 / kPi)); i <= static_cast<int>(std::ceil(x1 / kPi)); ++i)
    for (int j = static_cast<int>(std::floor(y0 / kPi)); j <= static_cast<int>(std::ceil(y1 / kPi)); ++j)
      punct.push_back({i * kPi, j * kPi});
  return count_bigons(p1, p2, punct).count;
}

}  // namespace earring

namespace earring {

PlanarCurve planar_figure_eight(const PlanarCurve& arc, double eps, double cross_at) {
  const auto& P = arc.pts;
  std::vector<double> acc{0};
  for (size_t k = 1; k < P.size(); ++k) acc.push_back(acc.back() + norm(P[k] - P[k - 1]));
  const double len = acc.back(), m = cross_at * len, win = 2 * eps;
  auto at = [&](double s, Vec2* n) {
    size_t k = std::upper_bound(acc.begin(), acc.end(), s) - acc.begin();
    k = std::clamp<size_t>(k, 1, P.size() - 1);
    Vec2 d = P[k] - P[k - 1];
    double l = norm(d);
    *n = Vec2{-d.y, d.x} * (1 / l);
    return P[k - 1] + d * ((s - acc[k - 1]) / l);
  };
  auto w = [&](double s) { return std::clamp((m - s) / win, -1.0, 1.0); };

  const double a = 2 * eps, b = len - 2 * eps;
  const int n = std::max(40, static_cast<int>(std::ceil(len / (eps / 2))));
  PlanarCurve out;
  out.closed = true;
  auto lobe = [&](Vec2 c, Vec2 from, Vec2 to, bool first_half_ccw) {
    double r0 = norm(from - c), r1 = norm(to - c);
    double t0 = std::atan2(from.y - c.y, from.x - c.x), t1 = std::atan2(to.y - c.y, to.x - c.x);
    double sweep = t1 - t0;
    if (first_half_ccw) {
      while (sweep <= 0) sweep += kTwoPi;
    } else {
      while (sweep >= 0) sweep -= kTwoPi;
    }
    for (int k = 1; k < 24; ++k) {
      double u = k / 24.0;
      double r = (1 - u) * r0 + u * r1;
      out.pts.push_back(c + Vec2{std::cos(t0 + u * sweep), std::sin(t0 + u * sweep)} * r);
    }
  };
  Vec2 nv;
  // the two passes are sampled off each other and off the crossing
  for (int k = 0; k <= n; ++k) {
    double s = a + (b - a) * std::clamp((k + 0.21) / n, 0.0, 1.0);
    if (k == 0) s = a;
    Vec2 p = at(s, &nv);
    out.pts.push_back(p + nv * (eps * w(s)));
  }
  {
    Vec2 p = at(b, &nv);
    // the forward strand ends on the right, so pass the end corner counterclockwise
    lobe(P.back(), p + nv * (eps * w(b)), p - nv * (eps * w(b)), w(b) < 0);
  }
  for (int k = n; k >= 0; --k) {
    double s = a + (b - a) * std::clamp((k - 0.37) / n, 0.0, 1.0);
    Vec2 p = at(s, &nv);
    out.pts.push_back(p - nv * (eps * w(s)));
  }
  {
    Vec2 p = at(a, &nv);
    lobe(P.front(), p - nv * (eps * w(a)), p + nv * (eps * w(a)), w(a) < 0);
  }
  return out;
}

std::array<LocalPanel, 3> bigon_panels() {
  // A runs up between two corners; B comes in from the left, bulges across A
  // and returns, cutting out an empty lens between x and y on the axis
  PlanarCurve A{{{0, -3}, {0, 3}}, false};
  PlanarCurve B;
  for (int k = 0; k <= 400; ++k) {
    double t = -1 + k / 200.0;
    B.pts.push_back({1.5 - 4.5 * t * t, 2 * t});
  }
  std::vector<Vec2> punct{{0, -3}, {0, 3}, {-3, -2}, {-3, 2}};
  // A♮ crosses itself between x and y, B♮ before reaching x
  PlanarCurve An = planar_figure_eight(A, 0.15, 0.5);
  PlanarCurve Bn = planar_figure_eight(B, 0.15, 0.12);
  return {LocalPanel{A, B, punct}, LocalPanel{An, B, punct}, LocalPanel{A, Bn, punct}};
}

}  // namespace earring
