#include "doctest.h"
#include "earring/errors.hpp"
#include "earring/pillowcase.hpp"
#include "testutil.hpp"

using namespace earring;

TEST_CASE("normalize") {
  auto p = normalize(-0.3, -0.4);
  CHECK(p.gamma == doctest::Approx(0.3));
  CHECK(p.theta == doctest::Approx(0.4));
  CHECK_FALSE(p.corner_index);

  auto c = normalize(kPi, kPi);
  REQUIRE(c.corner_index);
  CHECK(*c.corner_index == 3);

  auto w = normalize(kTwoPi + 0.1, 0.2);
  CHECK(w.gamma == doctest::Approx(0.1));
  CHECK(w.theta == doctest::Approx(0.2));

  // boundary tie-break
  auto e = normalize(0, 5.0);
  CHECK(e.theta == doctest::Approx(kTwoPi - 5.0));
  CHECK(*normalize(0, 0).corner_index == 0);
  CHECK(*normalize(0, kPi).corner_index == 1);
  CHECK(*normalize(-kPi, 0).corner_index == 2);
}

TEST_CASE("embed3") {
  auto a = embed3(normalize(0, 0));
  CHECK(a[0] == doctest::Approx(1));
  CHECK(a[1] == doctest::Approx(1));
  CHECK(a[2] == doctest::Approx(1));
  auto b = embed3(normalize(kPi / 2, kPi / 2));
  CHECK(b[0] == doctest::Approx(0).epsilon(1e-15));
  CHECK(b[2] == doctest::Approx(1));
  auto c = embed3(normalize(kPi / 2, 0));
  CHECK(c[1] == doctest::Approx(1));
  CHECK(std::abs(c[2]) < 1e-15);
}

TEST_CASE("triple conversion") {
  auto p = triple_to_pillowcase({exp_k(0.7) * kI, exp_k(1.1) * kI, kI});
  CHECK(p.gamma == doctest::Approx(0.7));
  CHECK(p.theta == doctest::Approx(1.1));

  auto c = triple_to_pillowcase({kI, kI, kI});
  REQUIRE(c.corner_index);
  CHECK(*c.corner_index == 0);

  auto t = pillowcase_to_triple(normalize(kPi / 2, kPi));
  CHECK((t.b - kJ).norm() < 1e-15);
  CHECK((t.f + kI).norm() < 1e-15);

  CHECK_THROWS_AS(triple_to_pillowcase({kJ, kK, kI}), InvalidTriple);
}

TEST_CASE("triple conversion is conjugation invariant") {
  std::mt19937 rng(5);
  TracelessTriple base{exp_k(0.7) * kI, exp_k(1.1) * kI, kI};
  double worst = 0;
  for (int k = 0; k < 100; ++k) {
    Quat g = testutil::random_unit(rng);
    auto p = triple_to_pillowcase({rotate(g, base.b), rotate(g, base.f), rotate(g, base.a)});
    worst = std::max(worst, dist(p, normalize(0.7, 1.1)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("round trip and cubic surface") {
  std::mt19937 rng(7);
  double worst = 0, cubic = 0;
  for (int k = 0; k < 1000; ++k) {
    auto p = normalize(testutil::uniform(rng, -10, 10), testutil::uniform(rng, -10, 10));
    auto q = triple_to_pillowcase(pillowcase_to_triple(p));
    worst = std::max(worst, dist(p, q));
    // a random conjugate of a random triple
    Quat g = testutil::random_unit(rng);
    auto t = pillowcase_to_triple(p);
    auto r = triple_to_pillowcase({rotate(g, t.b), rotate(g, t.f), rotate(g, t.a)});
    auto [x, y, z] = embed3(r);
    cubic = std::max(cubic, std::abs(x * x + y * y + z * z - 2 * x * y * z - 1));
  }
  CHECK(worst < 1e-10);
  CHECK(cubic < 1e-10);
}

TEST_CASE("dist") {
  auto p = normalize(0.4, 2.0);
  CHECK(dist(p, p) == 0);
  CHECK(dist(normalize(0.1, 0), normalize(-0.1, 0)) < 1e-15);
  CHECK(dist(normalize(0, 0.3), normalize(0, 0.5)) == doctest::Approx(0.2));
  PillPoint raw{-0.4, -2.0, std::nullopt};
  CHECK(dist(p, raw) < 1e-15);
  // triangle inequality on a few random triples
  std::mt19937 rng(9);
  for (int k = 0; k < 200; ++k) {
    auto a = normalize(testutil::uniform(rng, 0, 7), testutil::uniform(rng, 0, 7));
    auto b = normalize(testutil::uniform(rng, 0, 7), testutil::uniform(rng, 0, 7));
    auto c = normalize(testutil::uniform(rng, 0, 7), testutil::uniform(rng, 0, 7));
    CHECK(dist(a, c) <= dist(a, b) + dist(b, c) + 1e-12);
  }
}
