#pragma once

#include <array>
#include <vector>

#include "earring/curve.hpp"
#include "earring/moduli.hpp"
#include "earring/topology.hpp"

namespace earring {

struct ComposedCurve {
  std::vector<Curve> components;                     // image curves in the second pillowcase
  std::vector<std::vector<ModuliPoint>> provenance;  // moduli point behind each sample (empty for models)
  std::vector<std::vector<Vec2>> base;               // first-factor point of each sample
  bool doubled_input = false;                        // s = 0: the input echoed twice
};

struct ComposeOptions {
  double step_init = 0.02;
  double step_min = 1e-4;
  double step_max = 0.05;
  int max_steps = 100000;
  double closure_tol = 1e-5;
  double residual_tol = 1e-11;
};

// one traced component in the ambient coordinates (γ, θ, h) ∈ R^5
struct TracePoint {
  double x[5];
  double param;  // tracker parameter along L
};

ComposedCurve compose_curve(const Curve& L, double s, const ComposeOptions& opts = {});

struct ModelOptions {
  std::array<int, 4> twist_signs{1, 1, 1, 1};
};

// bump profiles of the local twist model
double bump_h(double t);
double bump_g(double t);

ComposedCurve model_map_vdelta(const Curve& L, double delta, const ModelOptions& opts = {});

// sup over composed samples outside the δ-disks of the product distance to the model
double compare_to_model(const Curve& L, double s, double delta, const ComposeOptions& opts = {});
double compare_to_model(const ComposedCurve& composed, double delta);

struct GeneralizedPoint {
  double t0, t1;
  Quat h;
  double sigma_min;  // smallest singular value of the joint Jacobian
  bool regular;
  int sign;          // orientation sign of the crossing that seeded it
};

struct CountReport {
  int count = 0;
  int algebraic = 0;
  std::vector<GeneralizedPoint> points;
};

CountReport count_generalized_points(const Curve& A0, const Curve& A1, double s, const ComposeOptions& opts = {});

// homology pairing of a composed (or model) curve of A against an arc B,
// normalized so that [t,0] paired with [t,t] is +1
int pairing(const ComposedCurve& image, const Curve& B);

}  // namespace earring
