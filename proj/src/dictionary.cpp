#include "earring/dictionary.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <queue>

#include "earring/errors.hpp"
#include "earring/topology.hpp"

namespace earring {

namespace {

constexpr Vec2 kTopLeft{0, kPi};
constexpr Vec2 kBulletTurn{kPi / 2, 0};
constexpr Vec2 kCircTurn{kPi, kPi / 2};

// the three pieces of P cut along the dual loops, in one fixed lift
struct Region {
  Vec2 c;
  std::vector<double> rays;  // torus angles of the stop rays around c
};
const Region kDisk0{{0, 0}, {kPi / 2, 3 * kPi / 2}};
const Region kDisk3{{kPi, kPi}, {0, kPi}};
const Region kOuter{{kPi, 0}, {kPi / 4, 3 * kPi / 4, 5 * kPi / 4, 7 * kPi / 4}};

enum class Side { D, O };

const Region& region_of(Side s, Idem e) {
  if (s == Side::O) return kOuter;
  return e == Idem::Bullet ? kDisk0 : kDisk3;
}

// point on the canonical lift of a dual loop, u in (0,1)
Vec2 loop_point(Idem e, double u) {
  Vec2 mid = e == Idem::Bullet ? kBulletTurn : kCircTurn;
  Vec2 end = e == Idem::Bullet ? Vec2{0, -kPi} : Vec2{kTwoPi, kPi};
  if (u < 0.5) return kTopLeft + (mid - kTopLeft) * (2 * u);
  return mid + (end - mid) * (2 * u - 1);
}

int rays_between(const Region& r, double a, double b) {
  int n = 0;
  for (double ray : r.rays) {
    double first = ray + kTwoPi * std::ceil((a - ray) / kTwoPi);
    if (first <= a) first += kTwoPi;
    for (double x = first; x < b; x += kTwoPi) ++n;
  }
  return n;
}

Vec2 polar(Vec2 c, double rho, double phi) { return c + Vec2{std::cos(phi), std::sin(phi)} * rho; }

// counterclockwise chord from x to (a deck image of) y crossing n stop rays
std::vector<Vec2> chord_path(const Region& r, Vec2 x, Vec2 y, int n, double rho) {
  double px = std::atan2(x.y - r.c.y, x.x - r.c.x), py = std::atan2(y.y - r.c.y, y.x - r.c.x);
  std::optional<double> target;
  for (int j = -4; j < 4 * n + 8 && !target; ++j) {
    double phi = py + j * kPi;
    if (phi > px && rays_between(r, px, phi) == n) target = phi;
  }
  if (!target) throw UnsupportedArrow("chord does not fit the sectors of its region");
  std::vector<Vec2> pts{x};
  int steps = std::max(8, static_cast<int>(std::ceil((*target - px) * rho / 0.02)));
  for (int k = 0; k <= steps; ++k) pts.push_back(polar(r.c, rho, px + (*target - px) * k / steps));
  long half_turns = std::lround((*target - py) / kPi);
  Vec2 end = half_turns % 2 == 0 ? y : r.c * 2 - y;
  pts.push_back(end);
  return pts;
}

struct Deck {
  int eps = 1;
  Vec2 lambda;
  Vec2 operator()(Vec2 x) const { return x * eps + lambda; }
  Deck flip_at(Vec2 c) const { return {-eps, lambda + c * (2.0 * eps)}; }
};

bool close(Vec2 a, Vec2 b) { return norm(a - b) < 1e-9; }

struct Arrow {
  int from, to;
  ChordWord w;
  Side side;
};

Side side_of(const ChordWord& w) {
  Letter l = w.letters.front();
  return l == Letter::D1 || l == Letter::D2 ? Side::D : Side::O;
}

}  // namespace

Curve dual_loop(Idem e) {
  Vec2 mid = e == Idem::Bullet ? kBulletTurn : kCircTurn;
  Vec2 end = e == Idem::Bullet ? Vec2{0, -kPi} : Vec2{kTwoPi, kPi};
  return make_polyline({kTopLeft, mid, end}, CurveKind::Arc, 0.02);
}

const std::vector<StopRay>& stop_rays() {
  static const std::vector<StopRay> rays{
      {make_segment_arc(kCorners[0], kTopLeft), Letter::D1},
      {make_segment_arc(kCorners[3], kTopLeft), Letter::D2},
      {make_segment_arc(kCorners[2], {kTwoPi, kPi}), Letter::S2},
      {make_segment_arc(kCorners[2], kTopLeft), Letter::S1},
  };
  return rays;
}

TwistedComplex curve_to_complex(const Curve& c) {
  if (c.is_arc() && (c.start_corner == 1 || c.end_corner == 1)) throw TopLeftCornerHit("arc ends at the top-left corner");
  if (point_curve_distance(kTopLeft, c) < 1e-6) throw TopLeftCornerHit("curve passes through the top-left corner");

  struct Event {
    double t;
    bool gen;
    Idem idem;
    Letter letter;
    int sign;
  };
  std::vector<Event> ev;
  for (Idem e : {Idem::Circ, Idem::Bullet})
    for (const auto& p : intersection_number(dual_loop(e), c).points) ev.push_back({p.t2, true, e, Letter::S1, 0});
  for (const auto& r : stop_rays())
    for (const auto& p : intersection_number(r.ray, c).points) ev.push_back({p.t2, false, Idem::Circ, r.letter, p.sign});
  std::sort(ev.begin(), ev.end(), [](const Event& a, const Event& b) { return a.t < b.t; });

  std::vector<int> gen_at;
  for (int k = 0; k < static_cast<int>(ev.size()); ++k)
    if (ev[k].gen) gen_at.push_back(k);
  const int n = static_cast<int>(gen_at.size());
  TwistedComplex out;
  if (n == 0) return out;

  std::vector<Arrow> arrows;
  const int pairs = c.is_arc() ? n - 1 : n;
  for (int q = 0; q < pairs; ++q) {
    int a = gen_at[q], b = gen_at[(q + 1) % n];
    std::vector<Letter> letters;
    int sign = 0;
    const int m = static_cast<int>(ev.size());
    for (int k = (a + 1) % m; k != b; k = (k + 1) % m) {
      if (sign != 0 && ev[k].sign != sign) throw UnsupportedArrow("chord turns both ways; curve is not in minimal position");
      sign = ev[k].sign;
      letters.push_back(ev[k].letter);
    }
    if (letters.empty()) throw UnsupportedArrow("inessential segment between two crossings; curve is not in minimal position");
    int from = q, to = (q + 1) % n;
    if (sign < 0) {
      std::swap(from, to);
      std::reverse(letters.begin(), letters.end());
    }
    ChordWord w = ChordWord::of(letters);
    if (!is_valid(w) || w.src != ev[gen_at[from]].idem || w.tgt() != ev[gen_at[to]].idem)
      throw UnsupportedArrow("segment reads the non-word " + to_string(w));
    arrows.push_back({from, to, w, side_of(w)});
  }

  // filtration: arrows point forward; ties broken by position along the curve
  std::vector<int> indeg(n, 0), order;
  for (const auto& a : arrows) ++indeg[a.to];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int g = 0; g < n; ++g)
    if (indeg[g] == 0) ready.push(g);
  while (!ready.empty()) {
    int g = ready.top();
    ready.pop();
    order.push_back(g);
    for (const auto& a : arrows)
      if (a.from == g && --indeg[a.to] == 0) ready.push(a.to);
  }
  if (static_cast<int>(order.size()) != n) throw UnsupportedArrow("arrows form a cycle; no filtration exists");
  std::vector<int> rank(n);
  for (int k = 0; k < n; ++k) {
    rank[order[k]] = k;
    out.gens.push_back({"g" + std::to_string(k + 1), ev[gen_at[order[k]]].idem});
  }
  for (const auto& a : arrows) out.add(rank[a.from], rank[a.to], AlgebraElement(a.w));
  return out;
}

Curve complex_to_curve(const TwistedComplex& cx) {
  const int n = static_cast<int>(cx.gens.size());
  if (n == 0) throw UnsupportedArrow("empty complex has no curve");
  if (!mc_check(cx).ok) throw UnsupportedArrow("complex fails the Maurer-Cartan check");

  std::vector<Arrow> arrows;
  for (const auto& [k, v] : cx.d) {
    for (const auto& w : v.terms) {
      if (w.length() == 0 || w.length() > 2) throw UnsupportedArrow("arrow " + to_string(w) + " has no chord realization");
      arrows.push_back({k.first, k.second, w, side_of(w)});
    }
  }
  // at most one chord on each side of each crossing
  std::vector<std::array<int, 2>> slot(n, {-1, -1});
  for (int a = 0; a < static_cast<int>(arrows.size()); ++a) {
    int s = static_cast<int>(arrows[a].side);
    for (int g : {arrows[a].from, arrows[a].to}) {
      if (slot[g][s] >= 0) throw UnsupportedArrow("generator " + cx.gens[g].label + " has two chords on one side");
      slot[g][s] = a;
    }
  }

  std::vector<Vec2> pos(n);
  for (Idem e : {Idem::Circ, Idem::Bullet}) {
    std::vector<int> ids;
    for (int g = 0; g < n; ++g)
      if (cx.gens[g].idem == e) ids.push_back(g);
    for (size_t k = 0; k < ids.size(); ++k) {
      double u = 0.1 + 0.8 * (k + 0.5) / ids.size();
      if (std::abs(u - 0.5) < 0.03) u += 0.06;
      pos[ids[k]] = loop_point(e, u);
    }
  }

  // start at a crossing with a free side (arc) or anywhere (loop)
  int g0 = 0;
  Side enter = Side::D;
  bool arc = false;
  for (int g = 0; g < n && !arc; ++g) {
    for (Side s : {Side::D, Side::O}) {
      if (slot[g][static_cast<int>(s)] < 0) {
        g0 = g, enter = s, arc = true;
        break;
      }
    }
  }

  std::vector<Vec2> pts;
  Deck T;
  if (arc) pts.push_back(region_of(enter, cx.gens[g0].idem).c);
  pts.push_back(pos[g0]);
  std::vector<bool> seen(n, false);
  int g = g0;
  Side from_side = enter;
  if (!arc) from_side = Side::D;  // leave a loop's first crossing through its outer side
  for (;;) {
    seen[g] = true;
    Side out = from_side == Side::D ? Side::O : Side::D;
    int a = slot[g][static_cast<int>(out)];
    const Region& R = region_of(out, cx.gens[g].idem);
    if (a < 0) {
      pts.push_back(T(R.c));
      break;
    }
    const Arrow& ar = arrows[a];
    int next = ar.from == g ? ar.to : ar.from;
    double rho = 0.3 + 0.8 * (a + 0.5) / arrows.size();
    std::vector<Vec2> piece = chord_path(R, pos[ar.from], pos[ar.to], static_cast<int>(ar.w.length()), rho);
    if (ar.from != g) std::reverse(piece.begin(), piece.end());
    Deck Tp = close(piece.front(), pos[g]) ? T : T.flip_at(R.c);
    for (size_t k = 1; k < piece.size(); ++k) pts.push_back(Tp(piece[k]));
    T = close(piece.back(), pos[next]) ? Tp : Tp.flip_at(R.c);
    g = next;
    from_side = out;
    if (!arc && g == g0) break;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw UnsupportedArrow("complex describes more than one curve");

  Curve c = make_polyline(pts, arc ? CurveKind::Arc : CurveKind::Loop, 0.02);
  if (!arc) finalize_loop(c);
  return c;
}

}  // namespace earring
