#include "doctest.h"
#include "earring/errors.hpp"
#include "earring/topology.hpp"
#include "testutil.hpp"

#include <cmath>

using namespace earring;

namespace {

// once around a corner in P is half a turn around its lift
Curve corner_loop(int c, double r, bool ccw = true) {
  Vec2 z = kCorners[c];
  double sgn = ccw ? 1 : -1;
  return make_param_loop([&](double u) { return z + Vec2{std::cos(sgn * kPi * u), std::sin(sgn * kPi * u)} * r; }, 200);
}

Curve jittered(const Curve& c, std::mt19937& rng, double amp) {
  Curve r = c;
  for (size_t k = 1; k + 1 < r.samples.size(); ++k)
    r.samples[k] = r.samples[k] + Vec2{testutil::uniform(rng, -amp, amp), testutil::uniform(rng, -amp, amp)};
  return r;
}

}  // namespace

TEST_CASE("intersection numbers of two line loops") {
  Curve v = make_line_loop({kPi / 2, 0}, {0, kTwoPi});
  Curve h = make_line_loop({0, kPi / 2}, {kTwoPi, 0});
  auto a = intersection_number(v, h), b = intersection_number(h, v);
  CHECK(a.geometric == 2);
  CHECK(b.geometric == 2);
  CHECK(a.algebraic == -b.algebraic);
}

TEST_CASE("intersection number is antisymmetric on random pairs") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    Vec2 c1{testutil::uniform(rng, 0.8, 2.3), testutil::uniform(rng, 0.8, 5.4)};
    Vec2 c2 = c1 + Vec2{testutil::uniform(rng, -0.5, 0.5), testutil::uniform(rng, -0.5, 0.5)};
    Curve a = make_circle(c1, testutil::uniform(rng, 0.2, 0.5), 0.013);
    Curve b = trial % 2 ? make_circle(c2, testutil::uniform(rng, 0.2, 0.5), 0.017)
                        : make_line_loop({c2.x, 0.1}, {0, kTwoPi}, 0.017);
    auto ab = intersection_number(a, b), ba = intersection_number(b, a);
    CHECK(ab.algebraic == -ba.algebraic);
    CHECK(ab.geometric == ba.geometric);
    CHECK(ab.algebraic == 0);  // a is null-homologous in P*
  }
}

TEST_CASE("disjoint curves do not meet") {
  Curve a = make_circle({1.0, 1.0}, 0.3);
  Curve b = make_circle({2.0, 4.5}, 0.3);
  auto r = intersection_number(a, b);
  CHECK(r.geometric == 0);
  CHECK(r.algebraic == 0);
}

TEST_CASE("arcs sharing only a corner do not intersect") {
  auto r = intersection_number(make_slope_arc(1, 0), make_slope_arc(1, 1));
  CHECK(r.geometric == 0);
}

TEST_CASE("homology classes of corner loops") {
  CHECK(homology_class(corner_loop(0, 0.3)) == HomologyClass{1, 0, 0});
  CHECK(homology_class(corner_loop(1, 0.3)) == HomologyClass{0, 1, 0});
  CHECK(homology_class(corner_loop(2, 0.3)) == HomologyClass{0, 0, 1});
  CHECK(homology_class(corner_loop(3, 0.3)) == HomologyClass{-1, -1, -1});
  CHECK(homology_class(corner_loop(1, 0.3, false)) == HomologyClass{0, -1, 0});
  // a full turn around a corner lift goes twice around the corner
  CHECK(homology_class(make_circle(kCorners[2], 0.4)) == HomologyClass{0, 0, 2});
  CHECK(homology_class(make_circle({kPi / 2, kPi / 2}, 0.5)) == HomologyClass{});
  // the vertical line separates corners 0,1 from 2,3
  auto v = homology_class(make_line_loop({kPi / 2, 0}, {0, kTwoPi}));
  CHECK(std::abs(v.n0) == 1);
  CHECK(v.n0 == v.n1);
  CHECK(v.n2 == 0);
}

TEST_CASE("homology class survives refinement and jitter") {
  std::mt19937 rng(5);
  Curve c = corner_loop(2, 0.5);
  HomologyClass ref = homology_class(c);
  CHECK(homology_class(resampled(c, 0.002)) == ref);
  for (int k = 0; k < 10; ++k) CHECK(homology_class(jittered(c, rng, 0.004)) == ref);
}

TEST_CASE("classifier rejects a contractible circle") {
  Curve A = make_slope_arc(1, 0);
  Curve o = make_circle({kPi / 2, 0.3}, 0.2);
  auto v = classify_homology_fig8({o}, A, 1.0);
  CHECK_FALSE(v.is_homology_fig8);
  CHECK(v.alpha_plus.geometric == 0);
}

TEST_CASE("classifier demands support near the arc") {
  Curve A = make_slope_arc(1, 0);
  Curve far = make_circle({kPi / 2, kPi}, 0.3);
  CHECK_THROWS_AS(classify_homology_fig8({far}, A, 1.0), SupportViolation);
}

TEST_CASE("test arcs have the prescribed lengths") {
  Curve A = make_slope_arc(1, 1);
  auto t = fig8_test_arcs(A, 0.7);
  CHECK(curve_length(t.alpha_plus) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(curve_length(t.alpha_minus) == doctest::Approx(0.7).epsilon(1e-9));
  CHECK(curve_length(t.beta) == doctest::Approx(1.4).epsilon(1e-9));
}

TEST_CASE("bigons: single crossing and lens") {
  PlanarCurve a{{{-2, 0}, {2, 0}}, false};
  PlanarCurve b{{{0, -2}, {0, 2}}, false};
  CHECK(count_bigons(a, b, {}).count == 0);

  PlanarCurve arcb;
  for (int k = 0; k <= 100; ++k) {
    double x = -2 + 4.0 * k / 100;
    arcb.pts.push_back({x, 1 - x * x / 2});
  }
  auto lens = count_bigons(a, arcb, {});
  CHECK(lens.crossings == 2);
  CHECK(lens.count == 1);
  // a puncture inside the lens kills it
  CHECK(count_bigons(a, arcb, {{0, 0.5}}).count == 0);
}

TEST_CASE("bigons: a wave across a line") {
  PlanarCurve a{{{-5, 0}, {5, 0}}, false};
  PlanarCurve w;
  for (int k = 0; k <= 400; ++k) {
    double x = -4.5 + 9.0 * k / 400;
    w.pts.push_back({x, std::sin(x * kPi / 2 + 0.3)});
  }
  auto r = count_bigons(a, w, {});
  CHECK(r.crossings == 5);
  CHECK(r.count == 4);
  CHECK(count_bigons(a, w, {{0.8, 0.3}, {-1.2, -0.3}}).count == 2);
}

TEST_CASE("bigons: arrangements through vertices are refused") {
  PlanarCurve a{{{-1, 0}, {0, 0}, {1, 0}}, false};
  PlanarCurve b{{{0, -1}, {0, 1}}, false};
  CHECK_THROWS_AS(count_bigons(a, b, {}), NonSimpleArrangement);
}

TEST_CASE("bigons: the two local panels") {
  auto panels = bigon_panels();
  auto mid = count_bigons(panels[1].first, panels[1].second, panels[1].punctures);
  auto right = count_bigons(panels[2].first, panels[2].second, panels[2].punctures);
  CHECK(mid.crossings == 4);
  CHECK(right.crossings == 4);
  CHECK(mid.count == 0);
  CHECK(right.count == 1);
  // the bigon of (A, B♮) sits on the inner strand, between the crossings nearest the lens
  REQUIRE(right.corners.size() == 1);
  CHECK(std::abs(right.corners[0].first.x) < 1e-9);
  CHECK(std::abs(right.corners[0].first.y) < 1.155);
  CHECK(std::abs(right.corners[0].second.y) < 1.155);
}
