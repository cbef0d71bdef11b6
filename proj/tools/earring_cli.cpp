#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "earring/algebra.hpp"
#include "earring/correspondence.hpp"
#include "earring/dictionary.hpp"
#include "earring/errors.hpp"
#include "earring/io.hpp"
#include "earring/moduli.hpp"

using namespace earring;

namespace {

struct RunConfig {
  double s = 0.19;
  bool s_given = false;
  double delta = 0.2;
  int grid = 50;
  int jobs = 1;
  std::array<int, 4> twist_signs{1, 1, 1, 1};
  std::string out, svg;
};

// config file values first, explicit flags win
void load_config(const std::string& path, RunConfig& rc, const CLI::App& app) {
  if (path.empty()) return;
  json j = read_json(path);
  auto take = [&](const char* key, auto& field, const char* flag) {
    if (j.contains(key) && app.get_option(flag)->count() == 0) j[key].get_to(field);
  };
  take("s", rc.s, "--s");
  rc.s_given = j.contains("s");
  take("delta", rc.delta, "--delta");
  take("grid", rc.grid, "--grid");
  take("jobs", rc.jobs, "--jobs");
  take("out", rc.out, "--out");
  take("svg", rc.svg, "--svg");
  if (j.contains("twist_signs") && app.get_option("--twist-signs")->count() == 0) {
    auto v = j["twist_signs"].get<std::vector<int>>();
    if (v.size() != 4) throw IoError("twist_signs needs four entries");
    std::copy(v.begin(), v.end(), rc.twist_signs.begin());
  }
}

void validate(const RunConfig& rc) {
  if (rc.s < 0 || rc.s >= kPi / 4) throw IoError("s must lie in [0, pi/4)");
  if (rc.delta <= 0 || rc.delta >= kPi / 4) throw IoError("delta must lie in (0, pi/4)");
  for (int t : rc.twist_signs)
    if (t != 1 && t != -1) throw IoError("twist signs must be +1 or -1");
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") std::cout << text;
  else write_file(path, text);
}

Curve input_curve(const std::string& file, const std::vector<double>& slope) {
  if (!file.empty()) return curve_from_json(read_json(file));
  if (slope.size() == 2) return make_slope_arc(slope[0], slope[1]);
  throw IoError("give --curve FILE or --slope P Q");
}

TwistedComplex read_complex(const std::string& path) {
  std::string text = read_file(path);
  try {
    if (path.size() > 5 && path.substr(path.size() - 5) == ".json") return complex_from_json(json::parse(text));
    return from_text(text);
  } catch (const std::invalid_argument& e) {
    throw IoError(path + ": " + e.what());
  } catch (const json::exception& e) {
    throw IoError(path + ": " + e.what());
  }
}

std::string complex_out(const TwistedComplex& c, const std::string& format) {
  return format == "json" ? to_json(c).dump(2) + "\n" : to_text(c);
}

json histogram_json(const std::map<int, int>& h) {
  json j = json::object();
  for (auto [k, v] : h) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pillowcase correspondences, composed curves and chord-algebra complexes"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig rc;
  std::string config;
  app.add_option("--config", config, "JSON config document");
  app.add_option("--s", rc.s, "holonomy perturbation parameter");
  app.add_option("--delta", rc.delta, "corner radius");
  app.add_option("--grid", rc.grid, "grid size per axis");
  app.add_option("--jobs", rc.jobs, "worker threads");
  app.add_option("--out", rc.out, "output path");
  app.add_option("--svg", rc.svg, "SVG output path");
  std::vector<int> twist;
  app.add_option("--twist-signs", twist, "four signs for the model twists")->expected(4);

  // sample-moduli
  auto* sm = app.add_subcommand("sample-moduli", "solve the fiber over a grid on P^delta");
  std::string system = "H";
  int budget = 0, circle_n = 36;
  bool verify = false;
  sm->add_option("--system", system, "H (rescaled) or F (raw, s = 0 circle mode)")->check(CLI::IsMember({"H", "F"}));
  sm->add_option("--failure-budget", budget, "tolerated NoConvergence count");
  sm->add_option("--circle-samples", circle_n, "samples per circle fiber in F mode");
  sm->add_flag("--verify", verify, "add the spherical sweep to every fiber");

  // compose / model-map
  auto* co = app.add_subcommand("compose", "compose a curve with the correspondence");
  auto* mm = app.add_subcommand("model-map", "apply the local model v_delta");
  std::string curve_file;
  std::vector<double> slope;
  for (auto* sc : {co, mm}) {
    sc->add_option("--curve", curve_file, "curve JSON");
    sc->add_option("--slope", slope, "shortcut for the arc t -> [p t, q t]")->expected(2);
  }

  auto* cn = app.add_subcommand("counts", "generalized-point counts and the A_i.A_j matrix");
  auto* ty = app.add_subcommand("taylor", "decay of the first-order Taylor gap");
  int taylor_points = 20;
  unsigned seed = 1;
  ty->add_option("--points", taylor_points);
  ty->add_option("--seed", seed);
  auto* cg = app.add_subcommand("corner-gap", "gap of the corner system against a brute-force scan");

  auto* al = app.add_subcommand("algebra", "chord-algebra operations");
  al->require_subcommand(1);
  std::string format = "text", file_in, x_str, y_str;
  auto* a_mul = al->add_subcommand("mul", "product of two algebra elements");
  a_mul->add_option("x", x_str)->required();
  a_mul->add_option("y", y_str)->required();
  auto* a_mc = al->add_subcommand("mc-check", "Maurer-Cartan check");
  auto* a_ii = al->add_subcommand("ii", "the [I->I] mapping cone");
  auto* a_red = al->add_subcommand("reduce", "cancellation and basis clean-up");
  auto* a_tc = al->add_subcommand("to-curve", "realize a complex as a curve");
  auto* a_fc = al->add_subcommand("from-curve", "read a complex off a curve JSON");
  for (auto* sc : {a_mc, a_ii, a_red, a_tc, a_fc}) sc->add_option("input", file_in)->required();
  for (auto* sc : {a_ii, a_red, a_fc}) sc->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 4;
  }

  try {
    load_config(config, rc, app);
    rc.s_given |= app.get_option("--s")->count() > 0;
    if (!twist.empty()) std::copy(twist.begin(), twist.end(), rc.twist_signs.begin());
    validate(rc);

    if (*sm) {
      FiberOptions opts;
      opts.delta = rc.delta;
      opts.verify = verify;
      json summary;
      std::ostringstream csv;
      if (system == "F") {
        if (rc.s != 0) throw IoError("the F system is only sampled in its s = 0 circle mode");
        // every off-corner base point carries the whole circle perpendicular to i
        auto pts = pillow_grid(rc.grid, rc.delta);
        auto circle = s0_circle_fiber(circle_n);
        GridReport rep;
        for (const auto& p : pts)
          for (const auto& h : circle) {
            auto [f2, f3] = eval_F(p.x, p.y, h, 0);
            rep.rows.push_back({p.x, p.y, h, 0, f2, f3, 0, 0});
          }
        write_grid_csv(csv, rep);
        summary = {{"mode", "circle"}, {"points", pts.size()}, {"samples_per_fiber", circle_n}};
      } else {
        auto rep = sample_grid(rc.s, rc.grid, rc.delta, opts, rc.jobs);
        write_grid_csv(csv, rep);
        summary = {{"mode", "fiber"}, {"s", rc.s}, {"points", rep.points}, {"failures", rep.failures},
                   {"histogram", histogram_json(rep.histogram)}, {"min_corner_margin", rep.min_margin}};
        emit(rc.out, csv.str());
        (rc.out.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
        if (rep.failures > budget)
          throw NoConvergence(std::to_string(rep.failures) + " base points failed (budget " + std::to_string(budget) + ")");
        return 0;
      }
      emit(rc.out, csv.str());
      (rc.out.empty() ? std::cerr : std::cout) << summary.dump(2) << "\n";
      return 0;
    }

    if (*co || *mm) {
      Curve L = input_curve(curve_file, slope);
      ComposedCurve cc;
      if (*co) {
        cc = compose_curve(L, rc.s);
      } else {
        ModelOptions mo;
        mo.twist_signs = rc.twist_signs;
        cc = model_map_vdelta(L, rc.delta, mo);
      }
      json j;
      j["doubled"] = !L.is_arc() && cc.components.size() == 2;
      j["multiplicity"] = cc.doubled_input ? 2 : 1;
      json comps = json::array();
      for (const auto& c : cc.components) comps.push_back(to_json(c));
      j["components"] = comps;
      if (L.is_arc()) {
        auto v = classify_homology_fig8(cc.components, L, 1.0);
        j["verdict"] = to_json(v);
      } else {
        double h = 0;
        for (const auto& c : cc.components) h = std::max(h, hausdorff(c, L));
        j["hausdorff_to_input"] = h;
      }
      emit(rc.out, j.dump(2) + "\n");
      if (!rc.svg.empty())
        write_file(rc.svg, render_svg({{{L}, "#777", 0.7}, {cc.components, "#c0392b", 1.8}},
                                      *co ? "composed curve" : "model curve"));
      return 0;
    }

    if (*cn) {
      double s = rc.s_given ? rc.s : 0.05;
      json j;
      bool ok = true;
      auto unknot = count_generalized_points(make_slope_arc(1, 0), make_slope_arc(1, 1), s);
      j["unknot"] = unknot.count;
      ok &= unknot.count == 1 && unknot.points.size() == 1 && unknot.points[0].regular;
      std::vector<std::pair<Curve, Curve>> hopf{
          {make_slope_arc(1, 0), make_segment_arc({0, 0}, {kPi, -2 * kPi})},
          {make_slope_arc(1, -1), make_slope_arc(1, 1)},
          {make_slope_arc(0, 1), make_segment_arc({0, 0}, {2 * kPi, kPi})}};
      json hj = json::array();
      for (auto& [a, b] : hopf) {
        auto r = count_generalized_points(a, b, s);
        hj.push_back(r.count);
        bool reg = std::all_of(r.points.begin(), r.points.end(), [](const GeneralizedPoint& p) { return p.regular; });
        ok &= r.count == 2 && reg;
      }
      j["hopf"] = hj;
      std::array<Curve, 3> A{make_slope_arc(1, 0), make_slope_arc(1, 1), make_slope_arc(0, 1)};
      const int expect[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
      json mat = json::array();
      for (int i = 0; i < 3; ++i) {
        auto c = compose_curve(A[i], s);
        json row = json::array();
        for (int k = 0; k < 3; ++k) {
          int v = pairing(c, A[k]);
          row.push_back(v);
          ok &= v == expect[i][k];
        }
        mat.push_back(row);
      }
      j["matrix"] = mat;
      j["pass"] = ok;
      emit(rc.out, j.dump(2) + "\n");
      return ok ? 0 : 3;
    }

    if (*ty) {
      std::mt19937 rng(seed);
      std::uniform_real_distribution<double> U(0, 1);
      std::normal_distribution<double> N;
      json rows = json::array();
      double worst = 1e300;
      const double ss[] = {1e-2, 1e-3, 1e-4};
      for (int k = 0; k < taylor_points; ++k) {
        double g = U(rng) * kPi, t = U(rng) * kTwoPi;
        Quat h = normalized(Quat{0, N(rng), N(rng), N(rng)});
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (double s : ss) {
          double x = std::log(s), y = std::log(std::max(taylor_gap(g, t, h, s), 1e-300));
          sx += x, sy += y, sxx += x * x, sxy += x * y;
        }
        double slope_fit = (3 * sxy - sx * sy) / (3 * sxx - sx * sx);
        worst = std::min(worst, slope_fit);
        rows.push_back({{"gamma", g}, {"theta", t}, {"slope", slope_fit}});
      }
      json j{{"points", rows}, {"min_slope", worst}, {"pass", worst >= 0.9}};
      emit(rc.out, j.dump(2) + "\n");
      return worst >= 0.9 ? 0 : 3;
    }

    if (*cg) {
      double s = rc.s;
      double tau = corner_system_gap_argmin(s), gap = corner_system_gap(s);
      double brute = 1e300;
      for (long k = 0; k * 1e-5 <= kPi; ++k) {
        double t = k * 1e-5;
        brute = std::min(brute, std::max(std::abs(t - s * std::sin(t) - kPi / 2), std::abs(t + s * std::sin(t) - kPi / 2)));
      }
      bool ok = gap > 0.9 * s * std::sin(tau) && std::abs(gap - brute) <= 1e-6 + 1e-4 * brute;
      json j{{"s", s}, {"gap", gap}, {"tau_star", tau}, {"brute_force", brute}, {"pass", ok}};
      emit(rc.out, j.dump(2) + "\n");
      return ok ? 0 : 3;
    }

    if (*al) {
      if (*a_mul) {
        AlgebraElement x, y;
        try {
          x = parse_element(x_str);
          y = parse_element(y_str);
        } catch (const std::invalid_argument& e) {
          throw IoError(e.what());
        }
        emit(rc.out, to_string(mul_B(x, y)) + "\n");
        return 0;
      }
      if (*a_mc) {
        auto c = read_complex(file_in);
        auto r = mc_check(c);
        std::string msg = r.ok ? "true\n"
                               : "false: (d.d)(" + c.gens[r.i].label + ", " + c.gens[r.j].label + ") = " +
                                     to_string(r.value) + "\n";
        emit(rc.out, msg);
        return r.ok ? 0 : 3;
      }
      if (*a_ii) {
        auto c = read_complex(file_in);
        if (!mc_check(c).ok) throw UnsupportedArrow("input fails the Maurer-Cartan check");
        emit(rc.out, complex_out(functor_II(c), format));
        return 0;
      }
      if (*a_red) {
        auto c = read_complex(file_in);
        if (!mc_check(c).ok) throw UnsupportedArrow("input fails the Maurer-Cartan check");
        emit(rc.out, complex_out(reduce(c), format));
        return 0;
      }
      if (*a_tc) {
        Curve c = complex_to_curve(read_complex(file_in));
        emit(rc.out, to_json(c).dump() + "\n");
        if (!rc.svg.empty())
          write_file(rc.svg, render_svg({{{dual_loop(Idem::Bullet), dual_loop(Idem::Circ)}, "#aaa", 0.6},
                                         {{c}, "#1f4e9c", 1.6}},
                                        "curve of the complex"));
        return 0;
      }
      if (*a_fc) {
        Curve c = curve_from_json(read_json(file_in));
        emit(rc.out, complex_out(curve_to_complex(c), format));
        return 0;
      }
    }
  } catch (const NumericalError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ClassificationError& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const IoError& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const json::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}
