#pragma once

#include <array>
#include <vector>

#include "earring/curve.hpp"

namespace earring {

struct HomologyClass {
  int n0 = 0, n1 = 0, n2 = 0;
  bool operator==(const HomologyClass&) const = default;
  HomologyClass operator+(const HomologyClass& o) const { return {n0 + o.n0, n1 + o.n1, n2 + o.n2}; }
};

struct IntersectionPoint {
  double t1 = 0, t2 = 0;  // sample parameters on c1 and c2
  int sign = 0;
  Vec2 where;             // on the lift of c1
};

struct IntersectionReport {
  std::vector<IntersectionPoint> points;
  int algebraic = 0;
  int geometric = 0;
};

// signed count with the dγ∧dθ orientation: +1 when c2 crosses c1 from right to left
IntersectionReport intersection_number(const Curve& c1, const Curve& c2);
IntersectionReport intersection_number(const Curve& c1, const std::vector<Curve>& c2);

// planar chart of P* used for winding numbers: elliptope surface, radial
// projection to S^2, stereographic projection from the image of corner 3
Vec2 chart_point(const Vec2& torus_pt);
HomologyClass homology_class(const Curve& loop);

struct Fig8Verdict {
  bool is_homology_fig8 = false;
  bool is_connected = false;
  int components = 0;
  IntersectionReport alpha_plus, alpha_minus, beta;
};

// test arcs of the local disk model along an arc A
struct Fig8TestArcs {
  Curve alpha_plus, alpha_minus, beta;
};
Fig8TestArcs fig8_test_arcs(const Curve& A, double rho);

Fig8Verdict classify_homology_fig8(const std::vector<Curve>& comps, const Curve& A, double rho = 1.0);

struct PlanarCurve {
  std::vector<Vec2> pts;
  bool closed = false;
};

struct BigonReport {
  int count = 0;
  int crossings = 0;  // c1 ∩ c2
  std::vector<std::pair<Vec2, Vec2>> corners;  // the two vertices of each bigon
};

BigonReport count_bigons(const PlanarCurve& c1, const PlanarCurve& c2, const std::vector<Vec2>& punctures);
int count_bigons(const Curve& c1, const Curve& c2);

}  // namespace earring

namespace earring {

// planar figure eight around an open arc: two offset strands that swap
// sides at the given fraction of arc length, closed by lobes around the ends
PlanarCurve planar_figure_eight(const PlanarCurve& arc, double eps, double cross_at);

// local models of the three pairs (A,B), (A♮,B), (A,B♮) near two arcs
// meeting twice
struct LocalPanel {
  PlanarCurve first, second;
  std::vector<Vec2> punctures;
};
std::array<LocalPanel, 3> bigon_panels();

}  // namespace earring
