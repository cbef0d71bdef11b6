#include "earring/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace earring {

json to_json(const PillPoint& p) { return {{"gamma", p.gamma}, {"theta", p.theta}}; }

PillPoint pillpoint_from_json(const json& j) {
  try {
    return normalize(j.at("gamma").get<double>(), j.at("theta").get<double>());
  } catch (const json::exception& e) {
    throw IoError(std::string("bad point: ") + e.what());
  }
}

json to_json(const Curve& c) {
  json j;
  j["kind"] = c.is_arc() ? "arc" : "loop";
  json s = json::array();
  for (const auto& p : c.samples) s.push_back({p.x, p.y});
  j["samples"] = std::move(s);
  if (c.is_arc()) j["corners"] = {c.start_corner, c.end_corner};
  return j;
}

Curve curve_from_json(const json& j) {
  try {
    std::string kind = j.at("kind").get<std::string>();
    if (kind != "arc" && kind != "loop") throw IoError("curve kind must be \"arc\" or \"loop\"");
    Curve c;
    c.kind = kind == "arc" ? CurveKind::Arc : CurveKind::Loop;
    for (const auto& p : j.at("samples")) {
      if (!p.is_array() || p.size() != 2) throw IoError("curve samples must be [gamma, theta] pairs");
      c.samples.push_back({p[0].get<double>(), p[1].get<double>()});
    }
    if (c.samples.size() < 2) throw IoError("curve needs at least two samples");
    if (c.is_arc()) {
      c.start_corner = corner_of(c.samples.front(), 1e-6);
      c.end_corner = corner_of(c.samples.back(), 1e-6);
      if (c.start_corner < 0 || c.end_corner < 0) throw IoError("arc endpoints must be corner lifts");
      if (j.contains("corners")) {
        auto cs = j["corners"].get<std::vector<int>>();
        if (cs.size() != 2 || cs[0] != c.start_corner || cs[1] != c.end_corner)
          throw IoError("declared corners do not match the arc endpoints");
      }
    } else {
      try {
        finalize_loop(c);
      } catch (const std::exception& e) {
        throw IoError(std::string("loop does not close: ") + e.what());
      }
    }
    return c;
  } catch (const json::exception& e) {
    throw IoError(std::string("bad curve JSON: ") + e.what());
  }
}

json to_json(const FiberSolution& f) {
  json hs = json::array();
  for (size_t k = 0; k < f.h_list.size(); ++k) {
    const Quat& h = f.h_list[k];
    hs.push_back({{"h", {h.x, h.y, h.z}}, {"regular", static_cast<bool>(f.regular[k])}, {"residual", f.residuals[k]}});
  }
  return {{"count", f.h_list.size()}, {"solutions", hs}};
}

json to_json(const IntersectionReport& r) {
  json pts = json::array();
  for (const auto& p : r.points) pts.push_back({{"t1", p.t1}, {"t2", p.t2}, {"sign", p.sign}, {"at", {p.where.x, p.where.y}}});
  return {{"algebraic", r.algebraic}, {"geometric", r.geometric}, {"points", pts}};
}

json to_json(const Fig8Verdict& v) {
  return {{"is_homology_fig8", v.is_homology_fig8},
          {"is_connected", v.is_connected},
          {"components", v.components},
          {"alpha_plus", {{"algebraic", v.alpha_plus.algebraic}, {"geometric", v.alpha_plus.geometric}}},
          {"alpha_minus", {{"algebraic", v.alpha_minus.algebraic}, {"geometric", v.alpha_minus.geometric}}},
          {"beta", {{"algebraic", v.beta.algebraic}, {"geometric", v.beta.geometric}}}};
}

json to_json(const TwistedComplex& c) {
  json gens = json::array(), arrows = json::array();
  for (const auto& g : c.gens) gens.push_back({{"label", g.label}, {"idem", g.idem == Idem::Circ ? "a°" : "a•"}});
  for (const auto& [k, v] : c.d) {
    json words = json::array();
    for (const auto& w : v.terms) words.push_back(to_string(w));
    arrows.push_back({{"from", c.gens[k.first].label}, {"to", c.gens[k.second].label}, {"words", words}});
  }
  return {{"generators", gens}, {"arrows", arrows}};
}

TwistedComplex complex_from_json(const json& j) {
  // reuse the text parser so both formats share one set of checks
  try {
    std::string text;
    for (const auto& g : j.at("generators")) text += g.at("label").get<std::string>() + " = " + g.at("idem").get<std::string>() + "\n";
    for (const auto& a : j.at("arrows")) {
      std::string words;
      for (const auto& w : a.at("words")) words += (words.empty() ? "" : "+") + w.get<std::string>();
      text += a.at("from").get<std::string>() + " -> " + a.at("to").get<std::string>() + " : " + words + "\n";
    }
    return from_text(text);
  } catch (const json::exception& e) {
    throw IoError(std::string("bad complex JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw IoError(e.what());
  }
}

void write_grid_csv(std::ostream& os, const GridReport& r) {
  os << "gamma,theta,hx,hy,hz,s,F2,F3\n";
  char buf[256];
  for (const auto& row : r.rows) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g,%.12g,%.12g,%.6e,%.6e\n", row.gamma, row.theta, row.h.x,
                  row.h.y, row.h.z, row.s, row.F2, row.F3);
    os << buf;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path);
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw IoError(path + ": " + e.what());
  }
}

namespace {

constexpr double kScale = 80;
constexpr double kMargin = 20;

struct Px {
  double x, y;
};
Px to_px(double g, double t) { return {kMargin + g * kScale, kMargin + (kTwoPi - t) * kScale}; }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string render_svg(const std::vector<SvgLayer>& layers, const std::string& title) {
  const double w = kPi * kScale + 2 * kMargin, h = kTwoPi * kScale + 2 * kMargin;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(w) << "\" height=\"" << fmt(h) << "\" viewBox=\"0 0 "
     << fmt(w) << " " << fmt(h) << "\">\n";
  if (!title.empty()) os << "<title>" << title << "</title>\n";
  Px a = to_px(0, kTwoPi), b = to_px(kPi, 0);
  os << "<rect x=\"" << fmt(a.x) << "\" y=\"" << fmt(a.y) << "\" width=\"" << fmt(b.x - a.x) << "\" height=\""
     << fmt(b.y - a.y) << "\" fill=\"none\" stroke=\"#999\" stroke-width=\"0.5\"/>\n";
  Px m0 = to_px(0, kPi), m1 = to_px(kPi, kPi);
  os << "<line x1=\"" << fmt(m0.x) << "\" y1=\"" << fmt(m0.y) << "\" x2=\"" << fmt(m1.x) << "\" y2=\"" << fmt(m1.y)
     << "\" stroke=\"#bbb\" stroke-width=\"0.5\" stroke-dasharray=\"4 3\"/>\n";

  for (const auto& layer : layers) {
    for (const auto& c : layer.curves) {
      std::string d;
      bool pen = false;
      PillPoint prev{};
      for (const auto& s : c.samples) {
        PillPoint p = normalize(s);
        bool jump = pen && (std::abs(p.gamma - prev.gamma) > 0.5 || std::abs(p.theta - prev.theta) > 0.5);
        Px q = to_px(p.gamma, p.theta);
        d += (!pen || jump ? "M" : "L") + fmt(q.x) + " " + fmt(q.y) + " ";
        pen = true;
        prev = p;
      }
      if (!d.empty()) d.pop_back();
      os << "<path d=\"" << d << "\" fill=\"none\" stroke=\"" << layer.color << "\" stroke-width=\"" << fmt(layer.width)
         << "\"/>\n";
    }
  }

  const Vec2 marks[] = {{0, 0}, {0, kPi}, {kPi, 0}, {kPi, kPi}, {0, kTwoPi}, {kPi, kTwoPi}};
  for (const auto& m : marks) {
    Px q = to_px(m.x, m.y);
    os << "<path d=\"M" << fmt(q.x - 5) << " " << fmt(q.y - 5) << " L" << fmt(q.x + 5) << " " << fmt(q.y + 5) << " M"
       << fmt(q.x - 5) << " " << fmt(q.y + 5) << " L" << fmt(q.x + 5) << " " << fmt(q.y - 5)
       << "\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace earring
