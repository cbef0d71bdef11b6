#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "earring/pillowcase.hpp"
#include "earring/quat.hpp"

namespace earring {

struct ModuliPoint {
  double gamma = 0, theta = 0;
  Quat h = kJ;
  double s = 0;
};

struct FiberSolution {
  std::vector<Quat> h_list;
  std::vector<bool> regular;  // false marks a numerically degenerate (multiple) root
  std::vector<double> residuals;
};

struct FiberOptions {
  double delta = 0.2;
  bool verify = false;  // add the spherical grid sweep
  int grid_nu = 200;
  int grid_polar = 100;
  double seed_threshold = 0.5;
  double dedupe = 1e-6;
};

struct NewtonResult {
  Quat h;
  double residual = 0;
  int iterations = 0;
  bool converged = false;
};

// Evaluates F2, F3 and the rescaled system at fixed (gamma, theta, s);
// caches the h-independent factors.
class SliceEval {
 public:
  SliceEval(double gamma, double theta, double s);
  std::pair<double, double> F(const Quat& h) const;
  std::pair<double, double> H(const Quat& h) const;

 private:
  double s_;
  Quat b_, f_, fa_, af_, baf_;
};

std::pair<double, double> eval_F(double gamma, double theta, const Quat& h, double s);
std::pair<double, double> h_system(double gamma, double theta, const Quat& h, double s);
inline std::pair<double, double> eval_H(double gamma, double theta, const Quat& h, double s) {
  return h_system(gamma, theta, h, s);
}

double taylor_gap(double gamma, double theta, const Quat& h, double s);

std::pair<Quat, Quat> sigma_sections(double gamma, double theta);

ModuliPoint iota_hat(const ModuliPoint& m);

NewtonResult newton_on_sphere(double gamma, double theta, double s, const Quat& seed);

FiberSolution solve_fiber(double gamma, double theta, double s, const FiberOptions& opts = {});

// s = 0 with the unscaled system: the whole circle perpendicular to i
std::vector<Quat> s0_circle_fiber(int n);

struct Restriction {
  PillPoint p0, p1;
};
Restriction restrict_map(const ModuliPoint& m);
// unnormalized torus lift of r1, together with the triple used
Vec2 restrict_r1_lift(const ModuliPoint& m, double tol = 1e-8);

double corner_system_gap(double s);
double corner_system_gap_argmin(double s);

struct GridRow {
  double gamma, theta;
  Quat h;
  double s, F2, F3;
  double margin0, margin1;  // sin^2+sin^2 of the two restricted outputs
};

struct GridReport {
  std::vector<GridRow> rows;
  std::map<int, int> histogram;  // fiber size -> number of base points
  double min_margin = 1e300;
  int points = 0;
  int failures = 0;
};

std::vector<Vec2> pillow_grid(int n, double delta);
GridReport sample_grid(double s, int n, double delta, const FiberOptions& opts, int jobs = 1);

}  // namespace earring
