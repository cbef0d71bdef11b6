#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "earring/algebra.hpp"
#include "earring/correspondence.hpp"
#include "earring/dictionary.hpp"
#include "earring/errors.hpp"
#include "earring/io.hpp"
#include "earring/moduli.hpp"
#include "earring/topology.hpp"

namespace py = pybind11;
using namespace earring;

namespace {

using Triple = std::array<double, 3>;

Quat pure(const Triple& v) { return normalized(Quat{0, v[0], v[1], v[2]}); }
Triple triple(const Quat& q) { return {q.x, q.y, q.z}; }

py::dict counts(const IntersectionReport& r) {
  py::dict d;
  d["algebraic"] = r.algebraic;
  d["geometric"] = r.geometric;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "pillowcase correspondences and chord-algebra complexes";

  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  auto classification = py::register_exception<ClassificationError>(m, "ClassificationError", PyExc_ValueError);
  py::register_exception<IoError>(m, "IoError", PyExc_IOError);
  // leaf errors surface under their own names
  py::register_exception<NoConvergence>(m, "NoConvergence", numerical.ptr());
  py::register_exception<BadDelta>(m, "BadDelta", numerical.ptr());
  py::register_exception<CornerInput>(m, "CornerInput", numerical.ptr());
  py::register_exception<ContinuationStall>(m, "ContinuationStall", numerical.ptr());
  py::register_exception<NonCancellable>(m, "NonCancellable", classification.ptr());
  py::register_exception<UnsupportedArrow>(m, "UnsupportedArrow", classification.ptr());
  py::register_exception<TopLeftCornerHit>(m, "TopLeftCornerHit", classification.ptr());

  py::class_<Curve>(m, "Curve")
      .def_property_readonly("is_arc", &Curve::is_arc)
      .def_property_readonly("samples",
                             [](const Curve& c) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& p : c.samples) out.emplace_back(p.x, p.y);
                               return out;
                             })
      .def_property_readonly("corners",
                             [](const Curve& c) -> py::object {
                               if (!c.is_arc()) return py::none();
                               return py::make_tuple(c.start_corner, c.end_corner);
                             })
      .def("to_json", [](const Curve& c) { return to_json(c).dump(); })
      .def("__len__", [](const Curve& c) { return c.samples.size(); })
      .def("__repr__", [](const Curve& c) {
        return std::string("<Curve ") + (c.is_arc() ? "arc" : "loop") + " with " + std::to_string(c.samples.size()) +
               " samples>";
      });

  m.def("curve_from_json", [](const std::string& s) {
    try {
      return curve_from_json(json::parse(s));
    } catch (const json::exception& e) {
      throw IoError(e.what());
    }
  });
  m.def("slope_arc", [](double p, double q) { return make_slope_arc(p, q); }, py::arg("p"), py::arg("q"));
  m.def("segment_arc", [](std::pair<double, double> a, std::pair<double, double> b) {
    return make_segment_arc({a.first, a.second}, {b.first, b.second});
  });
  m.def("circle", [](std::pair<double, double> c, double r, bool ccw) { return make_circle({c.first, c.second}, r, 0.02, ccw); },
        py::arg("center"), py::arg("r"), py::arg("ccw") = true);
  m.def("line_loop", [](std::pair<double, double> start, std::pair<double, double> lambda) {
    return make_line_loop({start.first, start.second}, {lambda.first, lambda.second});
  });
  m.def("hausdorff", &hausdorff);

  m.def("normalize", [](double g, double t) {
    auto p = normalize(g, t);
    return std::make_pair(p.gamma, p.theta);
  });

  m.def("eval_H", [](double g, double t, const Triple& h, double s) { return eval_H(g, t, pure(h), s); });
  m.def("eval_F", [](double g, double t, const Triple& h, double s) { return eval_F(g, t, pure(h), s); });
  m.def("taylor_gap", [](double g, double t, const Triple& h, double s) { return taylor_gap(g, t, pure(h), s); });
  m.def(
      "solve_fiber",
      [](double g, double t, double s, double delta, bool verify) {
        FiberOptions o;
        o.delta = delta;
        o.verify = verify;
        std::vector<Triple> out;
        for (const auto& h : solve_fiber(g, t, s, o).h_list) out.push_back(triple(h));
        return out;
      },
      py::arg("gamma"), py::arg("theta"), py::arg("s"), py::arg("delta") = 0.2, py::arg("verify") = false);
  m.def("restrict_map", [](double g, double t, const Triple& h, double s) {
    auto r = restrict_map({g, t, pure(h), s});
    return std::make_pair(std::make_pair(r.p0.gamma, r.p0.theta), std::make_pair(r.p1.gamma, r.p1.theta));
  });
  m.def("corner_system_gap", &corner_system_gap);
  m.def("corner_system_gap_argmin", &corner_system_gap_argmin);
  m.def(
      "sample_grid",
      [](double s, int n, double delta, int jobs) {
        FiberOptions o;
        o.delta = delta;
        auto r = sample_grid(s, n, delta, o, jobs);
        py::dict d;
        d["histogram"] = r.histogram;
        d["points"] = r.points;
        d["failures"] = r.failures;
        d["min_margin"] = r.min_margin;
        return d;
      },
      py::arg("s"), py::arg("n") = 50, py::arg("delta") = 0.2, py::arg("jobs") = 1);

  py::class_<ComposedCurve>(m, "ComposedCurve")
      .def_readonly("components", &ComposedCurve::components)
      .def_readonly("doubled_input", &ComposedCurve::doubled_input);
  m.def("compose_curve", [](const Curve& L, double s) { return compose_curve(L, s); });
  m.def(
      "model_map",
      [](const Curve& L, double delta, std::array<int, 4> twist) {
        ModelOptions o;
        o.twist_signs = twist;
        return model_map_vdelta(L, delta, o);
      },
      py::arg("curve"), py::arg("delta"), py::arg("twist_signs") = std::array<int, 4>{1, 1, 1, 1});
  m.def("compare_to_model", [](const Curve& L, double s, double delta) { return compare_to_model(L, s, delta); });
  m.def("pairing", &pairing);
  m.def("count_generalized_points",
        [](const Curve& a, const Curve& b, double s) { return count_generalized_points(a, b, s).count; });
  m.def("intersection_number", [](const Curve& a, const Curve& b) { return counts(intersection_number(a, b)); });
  m.def(
      "classify_fig8",
      [](const std::vector<Curve>& comps, const Curve& A, double rho) {
        auto v = classify_homology_fig8(comps, A, rho);
        py::dict d;
        d["is_homology_fig8"] = v.is_homology_fig8;
        d["is_connected"] = v.is_connected;
        d["components"] = v.components;
        d["alpha_plus"] = counts(v.alpha_plus);
        d["alpha_minus"] = counts(v.alpha_minus);
        d["beta"] = counts(v.beta);
        return d;
      },
      py::arg("components"), py::arg("arc"), py::arg("rho") = 1.0);
  m.def("count_bigons", [](const Curve& a, const Curve& b) { return count_bigons(a, b); });

  // complexes cross the boundary in the text format
  auto to_complex = [](const std::string& text) {
    try {
      return from_text(text);
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  };
  m.def("mul", [](const std::string& x, const std::string& y) {
    try {
      return to_string(mul_B(parse_element(x), parse_element(y)));
    } catch (const std::invalid_argument& e) {
      throw IoError(e.what());
    }
  });
  m.def("central_H", [] { return to_string(central_H()); });
  m.def("mc_check", [=](const std::string& t) { return mc_check(to_complex(t)).ok; });
  m.def("functor_II", [=](const std::string& t) { return to_text(functor_II(to_complex(t))); });
  m.def("reduce", [=](const std::string& t) { return to_text(reduce(to_complex(t))); });
  m.def("same_up_to_relabeling",
        [=](const std::string& a, const std::string& b) { return same_up_to_relabeling(to_complex(a), to_complex(b)); });
  m.def("curve_to_complex", [](const Curve& c) { return to_text(curve_to_complex(c)); });
  m.def("complex_to_curve", [=](const std::string& t) { return complex_to_curve(to_complex(t)); });
  m.def("t3_complex", [] { return to_text(t3_complex()); });
  m.def("fig8_complex", [] { return to_text(fig8_complex()); });
}
