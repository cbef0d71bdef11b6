#include "earring/correspondence.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "earring/errors.hpp"

namespace earring {

namespace {

using V5 = Eigen::Matrix<double, 5, 1>;
using M45 = Eigen::Matrix<double, 4, 5>;
using M55 = Eigen::Matrix<double, 5, 5>;

Quat hq(const V5& x) { return Quat{0, x[2], x[3], x[4]}; }

std::pair<double, double> H_at(const V5& x, double s) { return h_system(x[0], x[1], hq(x), s); }

// equations of the lifted curve: H = 0, |h| = 1 and the base on L
class Traced {
 public:
  Traced(const Curve& L, double s, long seg) : s_(s), tr_(L, seg) {}

  Eigen::Vector4d G(const V5& x, M45* J) {
    Vec2 grad;
    auto [h1, h2] = H_at(x, s_);
    double sd = tr_.signed_distance({x[0], x[1]}, &grad);
    Eigen::Vector4d g(h1, h2, x[2] * x[2] + x[3] * x[3] + x[4] * x[4] - 1, sd);
    if (J) {
      constexpr double e = 1e-7;
      for (int c = 0; c < 5; ++c) {
        V5 a = x, b = x;
        a[c] += e;
        b[c] -= e;
        auto pa = H_at(a, s_), pb = H_at(b, s_);
        (*J)(0, c) = (pa.first - pb.first) / (2 * e);
        (*J)(1, c) = (pa.second - pb.second) / (2 * e);
      }
      J->row(2) << 0, 0, 2 * x[2], 2 * x[3], 2 * x[4];
      J->row(3) << grad.x, grad.y, 0, 0, 0;
    }
    return g;
  }

  CurveTracker& tracker() { return tr_; }

 private:
  double s_;
  CurveTracker tr_;
};

V5 kernel_dir(const M45& J) {
  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 5>> svd(
      (Eigen::Matrix<double, 5, 5>() << J, Eigen::Matrix<double, 1, 5>::Zero()).finished(), Eigen::ComputeFullV);
  V5 t = svd.matrixV().col(4);
  return t / t.norm();
}

// the two deck maps of the lifted curve: lattice translation and ι̂
V5 deck(const V5& x, bool flip, Vec2 lattice) {
  V5 y = x;
  if (flip) {
    y[0] = -x[0];
    y[1] = -x[1];
    y[3] = -x[3];
    y[4] = -x[4];
  }
  y[0] += lattice.x;
  y[1] += lattice.y;
  return y;
}
V5 deck_dir(const V5& t, bool flip) {
  V5 y = t;
  if (flip) {
    y[0] = -t[0];
    y[1] = -t[1];
    y[3] = -t[3];
    y[4] = -t[4];
  }
  return y;
}

Vec2 lattice_to(Vec2 from, Vec2 to) {
  return {kTwoPi * std::round((to.x - from.x) / kTwoPi), kTwoPi * std::round((to.y - from.y) / kTwoPi)};
}

struct Trace {
  std::vector<V5> pts;
  std::vector<double> params;
};

bool correct(Traced& sys, V5& y, const V5& anchor, const V5& normal, double tol, int* iters) {
  for (int it = 0; it < 12; ++it) {
    M45 J;
    Eigen::Vector4d g = sys.G(y, &J);
    double c = normal.dot(y - anchor);
    if (g.norm() < tol && std::abs(c) < 1e-12) {
      *iters = it;
      return true;
    }
    M55 A;
    A << J, normal.transpose();
    V5 rhs;
    rhs << -g, -c;
    V5 d = A.fullPivLu().solve(rhs);
    if (!d.allFinite()) return false;
    y += d;
  }
  Eigen::Vector4d g = sys.G(y, nullptr);
  *iters = 12;
  return g.norm() < tol;
}

Trace trace_component(const Curve& L, double s, const V5& x0, long seg0, const ComposeOptions& o) {
  Traced sys(L, s, seg0);
  Trace tr;
  V5 x = x0;
  M45 J;
  sys.G(x, &J);
  V5 t = kernel_dir(J);
  {
    // orient along L
    auto [a, b] = sys.tracker().lift().segment(sys.tracker().segment());
    Vec2 d = b - a;
    if (t[0] * d.x + t[1] * d.y < 0) t = -t;
  }
  const V5 t0 = t;
  tr.pts.push_back(x);
  tr.params.push_back(sys.tracker().param());

  double ds = o.step_init, travelled = 0;
  for (int step = 0; step < o.max_steps; ++step) {
    const long seg_saved = sys.tracker().segment();
    V5 xp = x + ds * t;
    V5 y = xp;
    int iters = 0;
    bool ok = correct(sys, y, xp, t, o.residual_tol, &iters);
    V5 tn;
    if (ok) {
      ok = (y - x).norm() < 2 * ds;
      if (ok) {
        sys.G(y, &J);
        tn = kernel_dir(J);
        if (tn.dot(t) < 0) tn = -tn;
        ok = tn.dot(t) > 0.95;
      }
    }
    if (!ok) {
      sys.tracker().set_segment(seg_saved);
      ds *= 0.5;
      if (ds < o.step_min) throw ContinuationStall("continuation step fell below the minimum");
      continue;
    }

    const V5 prev = x;
    x = y;
    t = tn;
    travelled += (x - prev).norm();

    // closure through a deck image of the start
    if (travelled > 10 * o.step_max) {
      for (bool flip : {false, true}) {
        V5 img = deck(x0, flip, {0, 0});
        Vec2 lat = lattice_to({img[0], img[1]}, {x[0], x[1]});
        img = deck(x0, flip, lat);
        V5 timg = deck_dir(t0, flip);
        double before = timg.dot(prev - img), after = timg.dot(x - img);
        if (before < 0 && after >= 0 && (x - img).norm() < 2 * ds + 1e-9) {
          V5 z = prev;
          sys.tracker().set_segment(seg_saved);
          int it2;
          if (correct(sys, z, img, timg, o.residual_tol, &it2) && (z - img).norm() < o.closure_tol) {
            tr.pts.push_back(img);
            tr.params.push_back(sys.tracker().param());
            return tr;
          }
          sys.G(x, nullptr);
        }
      }
    }

    tr.pts.push_back(x);
    tr.params.push_back(sys.tracker().param());
    if (iters <= 3) ds = std::min(ds * 1.5, o.step_max);
  }
  throw ContinuationStall("continuation did not close up");
}

double point_segment5(const V5& p, const V5& a, const V5& b) {
  V5 d = b - a;
  double l2 = d.squaredNorm();
  double u = l2 > 0 ? std::clamp((p - a).dot(d) / l2, 0.0, 1.0) : 0.0;
  return (p - (a + u * d)).norm();
}

double distance_to_trace(const V5& p, const Trace& tr) {
  double best = 1e300;
  for (bool flip : {false, true}) {
    for (size_t k = 1; k < tr.pts.size(); ++k) {
      V5 q = deck(p, flip, {0, 0});
      q = deck(p, flip, lattice_to({q[0], q[1]}, {tr.pts[k][0], tr.pts[k][1]}));
      best = std::min(best, point_segment5(q, tr.pts[k - 1], tr.pts[k]));
    }
  }
  return best;
}

ModuliPoint to_moduli(const V5& x, double s) { return {x[0], x[1], normalized(hq(x)), s}; }

Curve image_curve(const Trace& tr, double s, std::vector<ModuliPoint>* prov, std::vector<Vec2>* base) {
  Curve c;
  Vec2 prev;
  for (size_t k = 0; k < tr.pts.size(); ++k) {
    ModuliPoint m = to_moduli(tr.pts[k], s);
    Vec2 r = restrict_r1_lift(m);
    if (k > 0) r = nearest_rep(r, prev);
    c.samples.push_back(r);
    prev = r;
    prov->push_back(m);
    base->push_back({m.gamma, m.theta});
  }
  finalize_loop(c);
  return c;
}

V5 pack(Vec2 p, const Quat& h) {
  V5 x;
  x << p.x, p.y, h.x, h.y, h.z;
  return x;
}

}  // namespace

ComposedCurve compose_curve(const Curve& L, double s, const ComposeOptions& opts) {
  ComposedCurve out;
  const size_t mid = L.is_arc() ? L.samples.size() / 2 : 0;
  const Vec2 p = L.samples[mid];
  if (s == 0) {
    out.doubled_input = true;
    auto [hp, hm] = sigma_sections(p.x, p.y);
    for (const Quat& h : {hp, hm}) {
      out.components.push_back(L);
      std::vector<ModuliPoint> prov;
      for (const auto& q : L.samples) {
        bool corner = corner_of(q) >= 0;
        Quat hh = corner ? h : sigma_sections(q.x, q.y).first;
        if (!corner && h.y * hh.y + h.z * hh.z < 0) hh = -hh;
        prov.push_back({q.x, q.y, hh, 0});
      }
      out.provenance.push_back(prov);
      out.base.push_back(L.samples);
    }
    return out;
  }

  FiberOptions fo;
  fo.delta = 0;
  auto fib = solve_fiber(p.x, p.y, s, fo);
  if (fib.h_list.empty()) throw SeedDegenerate("empty fiber over the starting point");

  std::vector<Trace> traces;
  for (const Quat& h : fib.h_list) {
    V5 x0 = pack(p, h);
    bool seen = false;
    for (const auto& tr : traces)
      if (distance_to_trace(x0, tr) < 1e-4) seen = true;
    if (seen) continue;
    traces.push_back(trace_component(L, s, x0, static_cast<long>(std::min(mid, L.segments() - 1)), opts));
  }
  for (const auto& tr : traces) {
    std::vector<ModuliPoint> prov;
    std::vector<Vec2> base;
    out.components.push_back(image_curve(tr, s, &prov, &base));
    out.provenance.push_back(std::move(prov));
    out.base.push_back(std::move(base));
  }
  return out;
}

double bump_h(double t) {
  double x = std::clamp(t + 0.5, 0.0, 1.0);
  return kTwoPi * x * x * x * (x * (6 * x - 15) + 10);
}

double bump_g(double t) {
  double a = std::abs(t);
  if (a >= 2.0 / 3.0) return a;
  return 0.5 + 27.0 / 32.0 * a * a * a * a;
}

ComposedCurve model_map_vdelta(const Curve& L, double delta, const ModelOptions& opts) {
  if (!(delta > 0)) throw BadDelta("delta must be positive");
  ComposedCurve out;
  if (!L.is_arc()) {
    for (const auto& q : L.samples)
      if (corner_distance(q) < delta) throw BadDelta("loop enters a corner disk");
    for (int k = 0; k < 2; ++k) {
      out.components.push_back(L);
      out.base.push_back(L.samples);
      out.provenance.emplace_back();
    }
    return out;
  }

  const Vec2 cs = L.samples.front(), ce = L.samples.back();
  const size_t n = L.samples.size();
  auto exit_point = [&](Vec2 c, bool from_start) {
    for (size_t j = 1; j < n; ++j) {
      size_t k = from_start ? j : n - 1 - j, kp = from_start ? j - 1 : n - j;
      if (norm(L.samples[k] - c) >= delta) {
        Vec2 a = L.samples[kp], b = L.samples[k];
        double lo = 0, hi = 1;
        for (int it = 0; it < 60; ++it) {
          double m = 0.5 * (lo + hi);
          (norm(a + (b - a) * m - c) < delta ? lo : hi) = m;
        }
        return std::make_pair(a + (b - a) * hi, k);
      }
    }
    throw BadDelta("delta exceeds the arc");
  };
  auto [Ps, is] = exit_point(cs, true);
  auto [Pe, ie] = exit_point(ce, false);
  if (is > ie) throw BadDelta("corner disks overlap along the arc");

  std::vector<Vec2> mid{Ps};
  for (size_t k = is; k <= ie; ++k) {
    if (corner_distance(L.samples[k]) < delta * (1 - 1e-9)) throw BadDelta("arc re-enters a corner disk");
    mid.push_back(L.samples[k]);
  }
  mid.push_back(Pe);

  const int eps_s = opts.twist_signs[L.start_corner], eps_e = opts.twist_signs[L.end_corner];
  const int nl = std::max(64, static_cast<int>(std::ceil(kTwoPi * delta / 0.01)));

  std::vector<Vec2> pts, base;
  for (auto& q : mid) {
    pts.push_back(q);
    base.push_back(q);
  }
  // twist around the end corner, τ from +1 down to -1
  {
    Vec2 z = Pe - ce;
    double phi = std::atan2(z.y, z.x);
    for (int k = 1; k <= nl; ++k) {
      double tau = 1 - 2.0 * k / nl;
      double r = delta * std::sqrt(bump_g(tau));
      double a = phi - eps_e * (bump_h(tau) - kTwoPi) / 2;
      pts.push_back(ce + Vec2{std::cos(a), std::sin(a)} * r);
      base.push_back(ce + Vec2{std::cos(phi), std::sin(phi)} * r);
    }
  }
  for (size_t k = mid.size() - 1; k-- > 0;) {
    pts.push_back(ce * 2 - mid[k]);
    base.push_back(mid[k]);
  }
  // twist around the start corner in the reflected frame, τ from -1 up to +1
  {
    const Vec2 c2 = ce * 2 - cs;
    Vec2 z = cs - Ps;
    double phi = std::atan2(z.y, z.x);
    for (int k = 1; k <= nl; ++k) {
      double tau = -1 + 2.0 * k / nl;
      double r = delta * std::sqrt(bump_g(tau));
      double a = phi - eps_s * bump_h(tau) / 2;
      pts.push_back(c2 + Vec2{std::cos(a), std::sin(a)} * r);
      base.push_back(cs - Vec2{std::cos(phi), std::sin(phi)} * r);
    }
  }
  pts.back() = Ps + (ce - cs) * 2;

  Curve c;
  c.samples = std::move(pts);
  finalize_loop(c);
  out.components.push_back(std::move(c));
  out.base.push_back(std::move(base));
  out.provenance.emplace_back();
  return out;
}

double compare_to_model(const ComposedCurve& composed, double delta) {
  double sup = 0;
  for (size_t c = 0; c < composed.components.size(); ++c) {
    const auto& pts = composed.components[c].samples;
    const auto& base = composed.base[c];
    for (size_t k = 0; k < pts.size(); ++k) {
      if (corner_distance(base[k]) < delta) continue;
      sup = std::max(sup, dist(normalize(pts[k]), normalize(base[k])));
    }
  }
  return sup;
}

double compare_to_model(const Curve& L, double s, double delta, const ComposeOptions& opts) {
  return compare_to_model(compose_curve(L, s, opts), delta);
}

int pairing(const ComposedCurve& image, const Curve& B) {
  return -intersection_number(B, image.components).algebraic;
}

namespace {

struct JointSystem {
  PeriodLift l0, l1;
  double s;

  V5 F(const V5& u) const {
    // u = (t0, hx, hy, hz, t1)
    Vec2 p = l0.point(u[0]);
    Quat h{0, u[1], u[2], u[3]};
    auto [h1, h2] = h_system(p.x, p.y, h, s);
    Vec2 q = l1.point(u[4]);
    Vec2 r = nearest_rep(restrict_r1_lift({p.x, p.y, normalized(h), s}, 1e300), q);
    V5 f;
    f << h1, h2, h.x * h.x + h.y * h.y + h.z * h.z - 1, r.x - q.x, r.y - q.y;
    return f;
  }

  M55 J(const V5& u) const {
    M55 j;
    constexpr double e = 1e-7;
    for (int c = 0; c < 5; ++c) {
      V5 a = u, b = u;
      a[c] += e;
      b[c] -= e;
      j.col(c) = (F(a) - F(b)) / (2 * e);
    }
    return j;
  }
};

}  // namespace

CountReport count_generalized_points(const Curve& A0, const Curve& A1, double s, const ComposeOptions& opts) {
  if (!A0.is_arc() || !A1.is_arc()) throw std::invalid_argument("generalized points are counted between arcs");
  ComposeOptions o = opts;
  CountReport rep;
  ComposedCurve img = compose_curve(A0, s, o);
  if (img.doubled_input) throw SeedDegenerate("s = 0 gives a degenerate image");

  // lift parameters of the traced base points along A0
  JointSystem sys{period_lift(A0), period_lift(A1), s};
  std::vector<GeneralizedPoint> found;
  for (size_t c = 0; c < img.components.size(); ++c) {
    const auto& prov = img.provenance[c];
    CurveTracker trk(A0, static_cast<long>(A0.segments() / 2));
    std::vector<double> t0s;
    for (const auto& m : prov) {
      trk.signed_distance({m.gamma, m.theta});
      t0s.push_back(trk.param());
    }
    auto ir = intersection_number(A1, img.components[c]);
    for (const auto& ip : ir.points) {
      long k = std::clamp(static_cast<long>(std::floor(ip.t2)), 0L, static_cast<long>(prov.size()) - 2);
      double w = ip.t2 - k;
      const auto &m0 = prov[k], &m1 = prov[k + 1];
      V5 u;
      u << (1 - w) * t0s[k] + w * t0s[k + 1], (1 - w) * m0.h.x + w * m1.h.x, (1 - w) * m0.h.y + w * m1.h.y,
          (1 - w) * m0.h.z + w * m1.h.z, ip.t1;
      bool ok = false;
      for (int it = 0; it < 40; ++it) {
        V5 f = sys.F(u);
        if (f.norm() < 1e-12) {
          ok = true;
          break;
        }
        V5 d = sys.J(u).fullPivLu().solve(-f);
        if (!d.allFinite()) break;
        u += d;
      }
      if (!ok && sys.F(u).norm() < 1e-9) ok = true;
      if (!ok) throw NoConvergence("generalized point did not converge");
      Eigen::JacobiSVD<M55> svd(sys.J(u));
      double smin = svd.singularValues()[4];
      Quat h = normalized(Quat{0, u[1], u[2], u[3]});
      found.push_back({u[0], u[4], h, smin, smin > 1e-6, -ip.sign});
    }
  }

  // identify solutions that are the same point of the moduli space
  auto same = [&](const GeneralizedPoint& a, const GeneralizedPoint& b) {
    V5 xa = pack(sys.l0.point(a.t0), a.h), xb = pack(sys.l0.point(b.t0), b.h);
    for (bool flip : {false, true}) {
      V5 y = deck(xb, flip, {0, 0});
      y = deck(xb, flip, lattice_to({y[0], y[1]}, {xa[0], xa[1]}));
      if ((y - xa).norm() < 1e-6) return true;
    }
    return false;
  };
  for (const auto& g : found) {
    bool dup = false;
    for (const auto& r : rep.points)
      if (same(g, r)) dup = true;
    if (!dup) rep.points.push_back(g);
  }
  rep.count = static_cast<int>(rep.points.size());
  for (const auto& g : rep.points) rep.algebraic += g.sign;
  return rep;
}

}  // namespace earring
