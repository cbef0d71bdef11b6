#include "earring/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <thread>
#include <tuple>

#include <boost/math/tools/minima.hpp>

#include "earring/errors.hpp"

namespace earring {

SliceEval::SliceEval(double gamma, double theta, double s) : s_(s) {
  b_ = exp_k(gamma) * kI;
  f_ = exp_k(theta) * kI;
  fa_ = f_ * conj(kI);
  af_ = kI * conj(f_);
  baf_ = b_ * kI + f_;
}

std::pair<double, double> SliceEval::F(const Quat& h) const {
  const Quat p = exp_im(im(b_ * h) * s_);
  const Quat q = exp_im(im(fa_ * h) * s_);
  const Quat X = conj(p) * af_ * q * f_;
  return {re(X), re_mul(h, X)};
}

std::pair<double, double> SliceEval::H(const Quat& h) const {
  if (std::abs(s_) < 1e-9) return {re_mul(h, baf_), re_mul(h, kI)};
  auto [f2, f3] = F(h);
  return {f2 / s_, f3};
}

std::pair<double, double> eval_F(double gamma, double theta, const Quat& h, double s) {
  return SliceEval(gamma, theta, s).F(h);
}

std::pair<double, double> h_system(double gamma, double theta, const Quat& h, double s) {
  return SliceEval(gamma, theta, s).H(h);
}

double taylor_gap(double gamma, double theta, const Quat& h, double s) {
  if (s == 0) return 0;
  return std::abs(h_system(gamma, theta, h, s).first - h_system(gamma, theta, h, 0).first);
}

std::pair<Quat, Quat> sigma_sections(double gamma, double theta) {
  const double sg = std::sin(gamma), st = std::sin(theta);
  const double n2 = sg * sg + st * st;
  if (n2 < 1e-18) throw CornerInput("sigma undefined at a corner");
  const double n = std::sqrt(n2);
  Quat hp{0, 0, sg / n, st / n};
  return {hp, -hp};
}

ModuliPoint iota_hat(const ModuliPoint& m) { return {-m.gamma, -m.theta, rotate(kI, m.h), m.s}; }

namespace {

// orthonormal tangent frame at a unit imaginary h
std::pair<ImQuat, ImQuat> tangent_frame(const ImQuat& h) {
  ImQuat ref = std::abs(h.x) < 0.9 ? ImQuat{1, 0, 0} : ImQuat{0, 1, 0};
  ImQuat e1 = cross(h, ref);
  e1 = e1 * (1 / e1.norm());
  ImQuat e2 = cross(h, e1);
  return {e1, e2};
}

Quat on_sphere(const ImQuat& v) { return Quat::pure(v * (1 / v.norm())); }

double rnorm(std::pair<double, double> r) { return std::hypot(r.first, r.second); }

}  // namespace

NewtonResult newton_on_sphere(double gamma, double theta, double s, const Quat& seed) {
  SliceEval ev(gamma, theta, s);
  NewtonResult out;
  ImQuat h = im(seed);
  h = h * (1 / h.norm());
  auto r = ev.H(Quat::pure(h));
  double res = rnorm(r);
  constexpr double eps = 1e-7;
  for (int it = 0; it < 50 && res > 1e-12; ++it) {
    out.iterations = it + 1;
    auto [e1, e2] = tangent_frame(h);
    auto d1p = ev.H(on_sphere(h + e1 * eps)), d1m = ev.H(on_sphere(h - e1 * eps));
    auto d2p = ev.H(on_sphere(h + e2 * eps)), d2m = ev.H(on_sphere(h - e2 * eps));
    double j11 = (d1p.first - d1m.first) / (2 * eps), j21 = (d1p.second - d1m.second) / (2 * eps);
    double j12 = (d2p.first - d2m.first) / (2 * eps), j22 = (d2p.second - d2m.second) / (2 * eps);
    double det = j11 * j22 - j12 * j21;
    if (std::abs(det) < 1e-14) break;
    double u = -(j22 * r.first - j12 * r.second) / det;
    double v = -(-j21 * r.first + j11 * r.second) / det;
    double step = 1;
    ImQuat hn;
    std::pair<double, double> rn;
    double resn = 0;
    for (int k = 0; k < 30; ++k) {
      hn = h + e1 * (u * step) + e2 * (v * step);
      hn = hn * (1 / hn.norm());
      rn = ev.H(Quat::pure(hn));
      resn = rnorm(rn);
      if (resn < res) break;
      step *= 0.5;
    }
    if (!(resn < res)) break;
    h = hn;
    r = rn;
    res = resn;
  }
  out.h = Quat::pure(h);
  out.residual = res;
  out.converged = res <= 1e-10;
  return out;
}

namespace {

struct SphereGrid {
  int nu = 0, polar = 0;
  std::vector<Quat> pts;  // index j * nu + i
};

const SphereGrid& sphere_grid(int nu, int polar) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<SphereGrid>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (auto& g : cache)
    if (g->nu == nu && g->polar == polar) return *g;
  auto g = std::make_unique<SphereGrid>();
  g->nu = nu;
  g->polar = polar;
  g->pts.resize(static_cast<size_t>(nu) * polar);
  for (int j = 0; j < polar; ++j) {
    double phi = (j + 0.5) * kPi / polar;
    for (int i = 0; i < nu; ++i) {
      double nuv = i * kTwoPi / nu;
      g->pts[j * nu + i] = {0, std::cos(phi), std::sin(phi) * std::cos(nuv), std::sin(phi) * std::sin(nuv)};
    }
  }
  cache.push_back(std::move(g));
  return *cache.back();
}

void add_unique(FiberSolution& fs, const NewtonResult& nr, double tol) {
  for (const auto& h : fs.h_list)
    if ((h - nr.h).norm() < tol) return;
  fs.h_list.push_back(nr.h);
  fs.residuals.push_back(nr.residual);
  fs.regular.push_back(true);
}

}  // namespace

FiberSolution solve_fiber(double gamma, double theta, double s, const FiberOptions& opts) {
  if (corner_distance({gamma, theta}) < opts.delta) throw SeedDegenerate("base point too close to a corner");
  auto [sp, sm] = sigma_sections(gamma, theta);
  FiberSolution fs;
  std::vector<Quat> seeds{sp, sm};
  if (opts.verify) {
    const auto& g = sphere_grid(opts.grid_nu, opts.grid_polar);
    SliceEval ev(gamma, theta, s);
    std::vector<double> val(g.pts.size());
    for (size_t k = 0; k < g.pts.size(); ++k) {
      auto r = ev.H(g.pts[k]);
      val[k] = r.first * r.first + r.second * r.second;
    }
    const int nu = g.nu, np = g.polar;
    const double thr = opts.seed_threshold * opts.seed_threshold;
    for (int j = 0; j < np; ++j)
      for (int i = 0; i < nu; ++i) {
        double v = val[j * nu + i];
        if (v > thr) continue;
        bool is_min = true;
        for (int dj = -1; dj <= 1 && is_min; ++dj)
          for (int di = -1; di <= 1; ++di) {
            if (!di && !dj) continue;
            int jj = j + dj;
            if (jj < 0 || jj >= np) continue;
            int ii = (i + di + nu) % nu;
            if (val[jj * nu + ii] < v) {
              is_min = false;
              break;
            }
          }
        if (is_min) seeds.push_back(g.pts[j * nu + i]);
      }
  }
  bool any_failed = false;
  for (const auto& sd : seeds) {
    auto nr = newton_on_sphere(gamma, theta, s, sd);
    if (nr.converged)
      add_unique(fs, nr, opts.dedupe);
    else if (&sd - seeds.data() < 2)
      any_failed = true;
  }
  // in verification mode an empty result is certified by the sweep
  if (fs.h_list.empty() && any_failed && !opts.verify) throw NoConvergence("no fiber point found");
  // sort for determinism: by the j then k coefficient
  std::vector<size_t> idx(fs.h_list.size());
  for (size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    const auto &x = fs.h_list[a], &y = fs.h_list[b];
    return std::tie(x.y, x.z, x.x) > std::tie(y.y, y.z, y.x);
  });
  FiberSolution sorted;
  for (auto k : idx) {
    sorted.h_list.push_back(fs.h_list[k]);
    sorted.regular.push_back(fs.regular[k]);
    sorted.residuals.push_back(fs.residuals[k]);
  }
  return sorted;
}

std::vector<Quat> s0_circle_fiber(int n) {
  std::vector<Quat> out;
  for (int k = 0; k < n; ++k) out.push_back(exp_i(k * kTwoPi / n) * kJ);
  return out;
}

namespace {

TracelessTriple r1_triple(const ModuliPoint& m) {
  const Quat a = kI, b = exp_k(m.gamma) * kI, f = exp_k(m.theta) * kI;
  const Quat& h = m.h;
  const Quat p = exp_im(im(b * h) * m.s);
  const Quat q = exp_im(im(f * conj(a) * h) * m.s);
  const Quat pq = p * q;
  const Quat c = conj(pq) * b * pq;
  const Quat d = -(conj(h) * a * h);
  return {c, f, d};
}

}  // namespace

Restriction restrict_map(const ModuliPoint& m) {
  return {normalize(m.gamma, m.theta), triple_to_pillowcase(r1_triple(m))};
}

Vec2 restrict_r1_lift(const ModuliPoint& m, double tol) { return triple_to_pillowcase(r1_triple(m), tol).lift(); }

namespace {
double corner_residual(double tau, double s) { return std::abs(tau - kPi / 2) + std::abs(s * std::sin(tau)); }
}  // namespace

double corner_system_gap_argmin(double s) {
  constexpr int n = 1000;
  int best = 0;
  double bv = 1e300;
  for (int k = 0; k <= n; ++k) {
    double v = corner_residual(k * kPi / n, s);
    if (v < bv) {
      bv = v;
      best = k;
    }
  }
  double lo = std::max(0, best - 1) * kPi / n, hi = std::min(n, best + 1) * kPi / n;
  auto r = boost::math::tools::brent_find_minima([s](double t) { return corner_residual(t, s); }, lo, hi, 52);
  return r.second <= bv ? r.first : best * kPi / n;
}

double corner_system_gap(double s) { return corner_residual(corner_system_gap_argmin(s), s); }

std::vector<Vec2> pillow_grid(int n, double delta) {
  std::vector<Vec2> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec2 p{(i + 0.5) * kPi / n, (j + 0.5) * kTwoPi / n};
      if (corner_distance(p) >= delta) out.push_back(p);
    }
  return out;
}

GridReport sample_grid(double s, int n, double delta, const FiberOptions& opts, int jobs) {
  const auto pts = pillow_grid(n, delta);
  std::vector<std::vector<GridRow>> rows(pts.size());
  std::vector<char> failed(pts.size(), 0);
  auto work = [&](size_t k) {
    try {
      auto fs = solve_fiber(pts[k].x, pts[k].y, s, opts);
      for (const auto& h : fs.h_list) {
        ModuliPoint m{pts[k].x, pts[k].y, h, s};
        auto [f2, f3] = eval_F(m.gamma, m.theta, h, s);
        auto r = restrict_map(m);
        rows[k].push_back({m.gamma, m.theta, h, s, f2, f3, corner_margin(r.p0), corner_margin(r.p1)});
      }
    } catch (const NumericalError&) {
      failed[k] = 1;
    }
  };
  jobs = std::max(1, jobs);
  if (jobs == 1) {
    for (size_t k = 0; k < pts.size(); ++k) work(k);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t)
      pool.emplace_back([&, t] {
        for (size_t k = t; k < pts.size(); k += jobs) work(k);
      });
    for (auto& th : pool) th.join();
  }
  GridReport rep;
  rep.points = static_cast<int>(pts.size());
  for (size_t k = 0; k < pts.size(); ++k) {
    if (failed[k]) {
      ++rep.failures;
      continue;
    }
    rep.histogram[static_cast<int>(rows[k].size())]++;
    for (auto& r : rows[k]) {
      rep.min_margin = std::min({rep.min_margin, r.margin0, r.margin1});
      rep.rows.push_back(r);
    }
  }
  return rep;
}

}  // namespace earring
