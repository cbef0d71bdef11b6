#include "doctest.h"
#include "earring/correspondence.hpp"
#include "earring/errors.hpp"

#include <cmath>

using namespace earring;

namespace {

std::array<Curve, 3> skein_arcs() { return {make_slope_arc(1, 0), make_slope_arc(1, 1), make_slope_arc(0, 1)}; }

}  // namespace

TEST_CASE("s = 0 echoes the input twice") {
  Curve A = make_slope_arc(1, 1);
  auto c = compose_curve(A, 0);
  CHECK(c.doubled_input);
  REQUIRE(c.components.size() == 2);
  CHECK(c.components[0].samples == A.samples);
  CHECK(c.components[1].samples == A.samples);
}

TEST_CASE("composed arcs are connected homology figure eights") {
  auto A = skein_arcs();
  for (double s : {0.19, 0.05}) {
    for (const auto& a : A) {
      auto c = compose_curve(a, s);
      REQUIRE(c.components.size() == 1);
      auto v = classify_homology_fig8(c.components, a, 1.0);
      CHECK(v.is_homology_fig8);
      CHECK(v.is_connected);
      CHECK(std::abs(v.alpha_plus.algebraic) == 1);
      CHECK(v.alpha_plus.algebraic == -v.alpha_minus.algebraic);
      CHECK(v.beta.geometric == 2);
      CHECK(v.beta.algebraic == 0);
    }
  }
}

TEST_CASE("traced points solve the system") {
  auto c = compose_curve(make_slope_arc(1, 0), 0.19);
  const auto& prov = c.provenance[0];
  double worst = 0, step = 0;
  for (size_t k = 0; k < prov.size(); ++k) {
    auto [h1, h2] = h_system(prov[k].gamma, prov[k].theta, prov[k].h, 0.19);
    worst = std::max({worst, std::abs(h1), std::abs(h2)});
    if (k > 0) step = std::max(step, std::hypot(prov[k].gamma - prov[k - 1].gamma, prov[k].theta - prov[k - 1].theta));
  }
  CHECK(worst < 1e-9);
  CHECK(step <= 0.05 + 1e-9);
  // the base stays on the arc
  for (const auto& m : prov) CHECK(point_curve_distance({m.gamma, m.theta}, make_slope_arc(1, 0)) < 1e-9);
}

TEST_CASE("pairing matrix of the composed arcs") {
  auto A = skein_arcs();
  const int expect[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  for (int i = 0; i < 3; ++i) {
    auto c = compose_curve(A[i], 0.19);
    for (int j = 0; j < 3; ++j) CHECK(pairing(c, A[j]) == expect[i][j]);
  }
}

TEST_CASE("loops are doubled") {
  Curve L = make_circle({kPi / 2, kPi / 2}, 0.5);
  double prev = 1e300;
  for (double s : {0.05, 0.02, 0.01}) {
    auto c = compose_curve(L, s);
    REQUIRE(c.components.size() == 2);
    double h = std::max(hausdorff(c.components[0], L), hausdorff(c.components[1], L));
    CHECK(h < 0.1);
    CHECK(h < prev);
    prev = h;
  }
}

TEST_CASE("bump profiles") {
  CHECK(bump_h(-1) == 0);
  CHECK(bump_h(-0.5) == 0);
  CHECK(bump_h(1) == doctest::Approx(kTwoPi));
  CHECK(bump_h(0) == doctest::Approx(kPi));
  CHECK(bump_h(0.01) > bump_h(-0.01));
  CHECK(bump_g(0) == doctest::Approx(0.5));
  CHECK(bump_g(1) == 1);
  CHECK(bump_g(-1) == 1);
  CHECK(bump_g(0.8) == doctest::Approx(0.8));
  for (double t = -1; t <= 1; t += 0.01) {
    CHECK(bump_g(t) >= 0.5);
    CHECK(bump_h(t + 0.01) >= bump_h(t));
  }
  // continuous first derivative where the quartic meets |t|
  double e = 1e-6, t = 2.0 / 3.0;
  CHECK((bump_g(t) - bump_g(t - e)) / e == doctest::Approx(1).epsilon(1e-4));
}

TEST_CASE("model curves agree with the composed curves") {
  auto A = skein_arcs();
  for (int i = 0; i < 3; ++i) {
    auto m = model_map_vdelta(A[i], 0.3);
    auto c = compose_curve(A[i], 0.19);
    auto v = classify_homology_fig8(m.components, A[i], 1.0);
    CHECK(v.is_homology_fig8);
    CHECK(homology_class(m.components[0]) == homology_class(c.components[0]));
    for (int j = 0; j < 3; ++j) CHECK(pairing(m, A[j]) == pairing(c, A[j]));
  }
}

TEST_CASE("opposite twists at the two ends give an O instead") {
  Curve A = make_slope_arc(1, 0);
  ModelOptions o;
  o.twist_signs = {1, 1, -1, 1};
  auto m = model_map_vdelta(A, 0.3, o);
  auto v = classify_homology_fig8(m.components, A, 1.0);
  CHECK_FALSE(v.is_homology_fig8);
  CHECK(v.alpha_plus.algebraic == v.alpha_minus.algebraic);
}

TEST_CASE("delta must fit the arc") {
  CHECK_THROWS_AS(model_map_vdelta(make_slope_arc(1, 0), 2.0), BadDelta);
  CHECK_THROWS_AS(model_map_vdelta(make_slope_arc(1, 0), -0.1), BadDelta);
  CHECK_THROWS_AS(model_map_vdelta(make_circle({0.3, 0.3}, 0.2), 0.3), BadDelta);
}

TEST_CASE("composed curves approach the model as s shrinks") {
  Curve A = make_slope_arc(1, 1);
  double d2 = compare_to_model(A, 1e-2, 0.2), d3 = compare_to_model(A, 1e-3, 0.2);
  CHECK(d3 < d2);
  CHECK(d3 < 0.2 / 100);
}

TEST_CASE("generalized points of the unknot and Hopf pairs") {
  auto r = count_generalized_points(make_slope_arc(1, 0), make_slope_arc(1, 1), 0.05);
  CHECK(r.count == 1);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].regular);

  auto hopf = [](Curve a, Curve b) {
    auto q = count_generalized_points(a, b, 0.05);
    CHECK(q.count == 2);
    for (const auto& p : q.points) CHECK(p.regular);
  };
  hopf(make_slope_arc(1, 0), make_segment_arc({0, 0}, {kPi, -2 * kPi}));
  hopf(make_slope_arc(1, -1), make_slope_arc(1, 1));
  hopf(make_slope_arc(0, 1), make_segment_arc({0, 0}, {2 * kPi, kPi}));
}
