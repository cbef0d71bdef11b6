#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "earring/algebra.hpp"
#include "earring/correspondence.hpp"
#include "earring/moduli.hpp"
#include "earring/topology.hpp"

namespace earring {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

json to_json(const PillPoint& p);
PillPoint pillpoint_from_json(const json& j);

json to_json(const Curve& c);
Curve curve_from_json(const json& j);  // throws IoError on malformed input

json to_json(const FiberSolution& f);
json to_json(const IntersectionReport& r);
json to_json(const Fig8Verdict& v);
json to_json(const TwistedComplex& c);
TwistedComplex complex_from_json(const json& j);

// columns gamma, theta, hx, hy, hz, s, F2, F3
void write_grid_csv(std::ostream& os, const GridReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
json read_json(const std::string& path);

// fundamental domain [0,π]×[0,2π], θ increasing upward, corners as crosses
struct SvgLayer {
  std::vector<Curve> curves;
  std::string color = "black";
  double width = 1.0;
};
std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title = "");

}  // namespace earring
