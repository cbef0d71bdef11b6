#include "doctest.h"
#include "earring/dictionary.hpp"
#include "earring/io.hpp"

#include <sstream>

using namespace earring;

TEST_CASE("curve JSON round trip") {
  for (const Curve& c : {make_slope_arc(1, 1), make_circle({1.0, 2.0}, 0.4), make_line_loop({kPi / 2, 0}, {0, kTwoPi})}) {
    json j = to_json(c);
    Curve back = curve_from_json(json::parse(j.dump()));
    CHECK(back.kind == c.kind);
    CHECK(back.samples == c.samples);
    CHECK(back.start_corner == c.start_corner);
  }
  CHECK(to_json(make_slope_arc(1, 0))["corners"] == json({0, 2}));
}

TEST_CASE("malformed curves are refused") {
  CHECK_THROWS_AS(curve_from_json(json::parse(R"({"kind":"arc","samples":[[0.1,0.1],[1,1]]})")), IoError);
  CHECK_THROWS_AS(curve_from_json(json::parse(R"({"kind":"blob","samples":[]})")), IoError);
  CHECK_THROWS_AS(curve_from_json(json::parse(R"({"samples":[[0,0],[1,1]]})")), IoError);
  CHECK_THROWS_AS(curve_from_json(json::parse(R"({"kind":"arc","samples":[[0,0],[3.14159265358979,0]],"corners":[0,3]})")),
                  IoError);
}

TEST_CASE("pillowcase point JSON normalizes") {
  PillPoint p = pillpoint_from_json(json::parse(R"({"gamma": -1.0, "theta": 0.5})"));
  CHECK(p.gamma == doctest::Approx(1.0));
  CHECK(p.theta == doctest::Approx(kTwoPi - 0.5));
  CHECK(to_json(p)["gamma"].get<double>() == doctest::Approx(1.0));
}

TEST_CASE("complex JSON mirrors the text format") {
  auto c = functor_II(t3_complex());
  CHECK(complex_from_json(json::parse(to_json(c).dump())) == c);
  CHECK_THROWS_AS(complex_from_json(json::parse(R"({"generators":[{"label":"g1","idem":"a•"}],"arrows":[{"from":"g1","to":"g9","words":["D1"]}]})")),
                  IoError);
}

TEST_CASE("grid CSV header and rows") {
  GridReport r;
  r.rows.push_back({0.5, 1.5, Quat{0, 0, 1, 0}, 0.19, 1e-13, -2e-13, 0.1, 0.2});
  std::ostringstream os;
  write_grid_csv(os, r);
  CHECK(os.str().rfind("gamma,theta,hx,hy,hz,s,F2,F3\n0.5,1.5,0,1,0,0.19,", 0) == 0);
}

TEST_CASE("SVG output is deterministic") {
  std::vector<SvgLayer> layers{{{make_slope_arc(1, 1)}, "#888", 0.6}, {{complex_to_curve(fig8_complex())}, "#c00", 1.8}};
  std::string a = render_svg(layers, "t"), b = render_svg(layers, "t");
  CHECK(a == b);
  CHECK(a.rfind("<svg", 0) == 0);
  CHECK(a.find("stroke=\"#c00\"") != std::string::npos);
  CHECK(a.find("NaN") == std::string::npos);
}
