#include "doctest.h"
#include "earring/algebra.hpp"
#include "earring/correspondence.hpp"
#include "earring/dictionary.hpp"
#include "earring/errors.hpp"

#include <random>

using namespace earring;

namespace {

AlgebraElement w(const char* s) { return parse_element(s); }

std::vector<ChordWord> all_words(int max_len) {
  std::vector<ChordWord> out;
  const Letter ls[] = {Letter::S1, Letter::S2, Letter::D1, Letter::D2};
  std::vector<ChordWord> layer{ChordWord::id(Idem::Circ), ChordWord::id(Idem::Bullet)};
  for (int len = 0; len <= max_len; ++len) {
    std::vector<ChordWord> next;
    for (const auto& x : layer) {
      out.push_back(x);
      for (Letter l : ls) {
        ChordWord y = x;
        y.letters.push_back(l);
        if (is_valid(y)) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  return out;
}

TwistedComplex basis_changed_ii_t3() {
  return from_text(
      "g1 = a°\ng2 = a•\ng3 = a•\ng4 = a•\ng5 = a°\ng6 = a•\ng7 = a•\ng8 = a•\n"
      "g1 -> g2 : S1\ng1 -> g5 : D2\ng5 -> g6 : S1\ng2 -> g3 : D1\ng6 -> g7 : D1\n"
      "g3 -> g4 : S2S1\ng7 -> g8 : S2S1\ng4 -> g8 : D1\n");
}

}  // namespace

TEST_CASE("chord words") {
  CHECK(to_string(parse_word("S1S2S1")) == "S1S2S1");
  CHECK(parse_word("S1").src == Idem::Circ);
  CHECK(parse_word("S1").tgt() == Idem::Bullet);
  CHECK(parse_word("id•").length() == 0);
  CHECK_THROWS(parse_word("S1S1"));
  CHECK_THROWS(parse_word("D1S2"));
  CHECK_THROWS(parse_word("D1D2"));
  CHECK(is_valid(ChordWord::of({Letter::D2, Letter::D2})));
  CHECK_FALSE(is_valid(ChordWord::of({Letter::S2, Letter::D2})));
}

TEST_CASE("products in the chord algebra") {
  CHECK(mul_B(w("S1"), w("S2")) == w("S1S2"));
  CHECK(mul_B(w("D2"), w("S1")).is_zero());
  CHECK(mul_B(w("S1"), w("D1")).is_zero());
  CHECK(mul_B(w("id°"), w("D2")) == w("D2"));
  CHECK(mul_B(w("D2"), w("id°")) == w("D2"));
  CHECK(mul_B(w("id•"), w("D2")).is_zero());
  CHECK(mul_B(w("S1+D2"), w("S2+D1")) == w("S1S2"));
  CHECK((w("D1+S2S1") + w("D1")) == w("S2S1"));
  // truncation
  CHECK(mul_B(w("D1D1D1"), w("D1D1"), 4).is_zero());
  CHECK(mul_B(w("D1D1D1"), w("D1D1"), 5) == w("D1D1D1D1D1"));
}

TEST_CASE("multiplication is associative on random triples") {
  auto words = all_words(4);
  std::mt19937 rng(3);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    AlgebraElement x(words[pick(rng)]), y(words[pick(rng)]), z(words[pick(rng)]);
    CHECK(mul_B(mul_B(x, y), z) == mul_B(x, mul_B(y, z)));
  }
}

TEST_CASE("H is central") {
  AlgebraElement H = central_H();
  CHECK(H == w("D1+D2+S1S2+S2S1"));
  for (const auto& x : all_words(kNMax - 2)) CHECK(mul_B(H, AlgebraElement(x)) == mul_B(AlgebraElement(x), H));
}

TEST_CASE("Maurer-Cartan check") {
  CHECK(mc_check(from_text("g1 = a•\n")).ok);
  CHECK(mc_check(t3_complex()).ok);
  CHECK(mc_check(fig8_complex()).ok);
  // S1 then S2 composes to S1S2, which nothing cancels
  auto bad = from_text("g1 = a°\ng2 = a•\ng3 = a°\ng1 -> g2 : S1\ng2 -> g3 : S2\n");
  auto r = mc_check(bad);
  CHECK_FALSE(r.ok);
  CHECK(r.i == 0);
  CHECK(r.j == 2);
  CHECK(r.value == w("S1S2"));
  // ... unless a parallel path cancels it
  auto good = from_text("g1 = a°\ng2 = a•\ng3 = a•\ng4 = a°\ng1 -> g2 : S1\ng1 -> g3 : S1\ng2 -> g4 : S2\ng3 -> g4 : S2\n");
  CHECK(mc_check(good).ok);
}

TEST_CASE("the [I->I] functor") {
  auto one = functor_II(from_text("g1 = a•\n"));
  CHECK(same_up_to_relabeling(one, fig8_complex()));
  auto circ = functor_II(from_text("g1 = a°\n"));
  CHECK(circ.entry(0, 1) == w("D2+S1S2"));

  auto ii = functor_II(t3_complex());
  REQUIRE(ii.gens.size() == 8);
  CHECK(ii.lower_triangular());
  CHECK(mc_check(ii).ok);
  CHECK(ii.entry(0, 4) == w("D2+S1S2"));
  for (int k = 1; k < 4; ++k) CHECK(ii.entry(k, k + 4) == w("D1+S2S1"));
  CHECK(ii.entry(4, 5) == w("S1"));
  CHECK(ii.entry(6, 7) == w("S2S1"));
}

TEST_CASE("reduce") {
  auto acyclic = reduce(from_text("g1 = a•\ng2 = a•\ng1 -> g2 : id•\n"));
  CHECK(acyclic.gens.empty());
  CHECK(acyclic.d.empty());

  auto ii = functor_II(t3_complex());
  auto r = reduce(ii);
  CHECK(mc_check(r).ok);
  CHECK(r.lower_triangular());
  CHECK(r.term_count() == 8);
  CHECK(same_up_to_relabeling(r, basis_changed_ii_t3()));
  CHECK(reduce(r) == r);
  CHECK(homology_ranks(r) == homology_ranks(ii));

  // a zig-zag: g1 -> g3 and g2 -> g4 around the cancelled g2 -> g3
  auto z = from_text(
      "g1 = a°\ng2 = a•\ng3 = a•\ng4 = a°\n"
      "g1 -> g3 : S1\ng2 -> g3 : id•\ng2 -> g4 : S2\ng1 -> g4 : S1S2\n");
  REQUIRE(mc_check(z).ok);
  auto zr = reduce(z);
  CHECK(zr.gens.size() == 2);
  CHECK(zr.d.empty());  // S1S2 + S1·S2 = 0
  CHECK(homology_ranks(zr) == homology_ranks(z));

  // cancelling g1 -> g4 would need the zig-zag g3 -> g2 against the filtration
  auto bad = from_text(
      "g1 = a•\ng2 = a•\ng3 = a•\ng4 = a•\n"
      "g1 -> g4 : id•\ng3 -> g4 : D1\ng1 -> g2 : D1\n");
  REQUIRE(mc_check(bad).ok);
  CHECK_THROWS_AS(reduce(bad), NonCancellable);
}

TEST_CASE("text format round trip") {
  auto ii = functor_II(t3_complex());
  auto again = from_text(to_text(ii));
  CHECK(again == ii);
  CHECK(to_text(fig8_complex()) == "g1 = a•\ng2 = a•\ng1 -> g2 : D1+S2S1\n");
  CHECK_THROWS(from_text("g1 = a•\ng2 = a°\ng1 -> g2 : D1\n"));
  CHECK_THROWS(from_text("g1 = a•\ng1 -> g2 : D1\n"));
}

TEST_CASE("curves to complexes") {
  auto ab = curve_to_complex(make_slope_arc(1, 0));
  REQUIRE(ab.gens.size() == 1);
  CHECK(ab.gens[0].idem == Idem::Bullet);
  CHECK(ab.d.empty());
  auto ao = curve_to_complex(make_segment_arc(kCorners[2], kCorners[3]));
  REQUIRE(ao.gens.size() == 1);
  CHECK(ao.gens[0].idem == Idem::Circ);

  auto t3 = curve_to_complex(make_slope_arc(3, 1));
  CHECK(t3 == t3_complex());
  CHECK(mc_check(t3).ok);

  CHECK_THROWS_AS(curve_to_complex(make_slope_arc(0, 1)), TopLeftCornerHit);
  CHECK_THROWS_AS(curve_to_complex(make_line_loop({0.5, kPi + 0.5}, {kTwoPi, kTwoPi})), TopLeftCornerHit);
}

TEST_CASE("complexes to curves and back") {
  auto d1 = from_text("g1 = a•\ng2 = a•\ng1 -> g2 : D1\n");
  for (const auto& cx : {t3_complex(), fig8_complex(), d1, from_text("g1 = a°\n")}) {
    Curve c = complex_to_curve(cx);
    CHECK(same_up_to_relabeling(curve_to_complex(c), cx));
  }
  Curve t3 = complex_to_curve(t3_complex());
  CHECK(t3.is_arc());
  // same end corners as the slope-1/3 arc, and the same complex
  CHECK(std::min(t3.start_corner, t3.end_corner) == 0);
  CHECK(std::max(t3.start_corner, t3.end_corner) == 3);
  CHECK(same_up_to_relabeling(curve_to_complex(t3), curve_to_complex(make_slope_arc(3, 1))));
  CHECK_FALSE(complex_to_curve(fig8_complex()).is_arc());

  CHECK_THROWS_AS(complex_to_curve(from_text("g1 = a°\ng2 = a°\ng1 -> g2 : S1S2S1S2\n")), UnsupportedArrow);
  CHECK_THROWS_AS(complex_to_curve(from_text("g1 = a•\ng2 = a•\ng3 = a•\ng1 -> g2 : D1\ng1 -> g3 : D1D1\n")),
                  UnsupportedArrow);
}

TEST_CASE("the model figure eight matches [I->I] of a•") {
  Curve a = make_slope_arc(1, 0);
  auto lhs = curve_to_complex(model_map_vdelta(a, 0.3).components[0]);
  auto rhs = reduce(functor_II(curve_to_complex(a)));
  CHECK(same_up_to_relabeling(lhs, rhs));
  CHECK(same_up_to_relabeling(lhs, fig8_complex()));
}
