#ifndef SERRIN_SOLVER_VISCOUS_HPP
#define SERRIN_SOLVER_VISCOUS_HPP

#include <optional>
#include <span>
#include <vector>

#include "serrin/newton.hpp"
#include "serrin/profile.hpp"

namespace serrin::viscous {

/// Serrin's coupled b = 1 system as a two-point BVP:
///   nu (1-x^2) F'''' - 4 nu x F''' + F F''' + 3 F' F'' + 2 Omega Omega'/(1-x^2) = 0
///   nu (1-x^2) Omega'' + F Omega' = 0
/// with F(0) = F'(0) = Omega(0) = 0, F(1) = 0, Omega(1) = C_omega. The system
/// has differential order six; the sixth condition is the exposed `closure`
/// parameter, the value of F'' at the first interior node.
struct ViscousProblem {
  double nu;
  double c_omega = 1.0;
  Mesh mesh;
  double closure = 0.0;
  NewtonOptions newton{1e-10, 60, 30};

  ViscousProblem(double nu_, Mesh mesh_, double closure_ = 0.0, double c_omega_ = 1.0);

  /// k = 1/(2 nu), the parameterization used alongside nu.
  double k() const { return 1.0 / (2.0 * nu); }
};

struct ViscousSolution {
  std::vector<double> F, Omega;  // all nodes 0..n
  double residual_norm;
  int newton_iters;
  double closure;
  Profile upper;  // (F, G = sqrt(1-x^2) F', Omega) on the full grid
};

/// Mesh step satisfying h <= nu/4 (and h <= 2.5e-3) that divides [0,1].
Mesh layer_resolving_mesh(double nu);

ViscousSolution solve_serrin_b1(const ViscousProblem& prob);
ViscousSolution solve_serrin_b1(const ViscousProblem& prob, std::span<const double> F0,
                                std::span<const double> Omega0);

/// Closure calibration emulating Serrin's P = 0 runs: minimizes the
/// least-squares distance of Omega to C_omega over x in [0.5, 0.95].
struct CalibrationRecord {
  std::vector<double> closure_tried;
  std::vector<double> objective;
  double best_closure = 0.0;
  double best_objective = 0.0;
};
CalibrationRecord calibrate_closure(ViscousProblem prob);

/// Estimated boundary-layer size: x* = sup{ x : |Omega(x) - C_omega| >
/// delta |C_omega| }, located by scan plus linear interpolation; 0 when the
/// deviation never exceeds the threshold. Throws std::runtime_error when no
/// crossing exists (delta too large or too small for the profile).
double layer_size(const Profile& profile, double delta = 0.05);

struct LayerMeasurement {
  double nu;
  double layer_x;
  double delta;
};

/// Runs the solver over the viscosity list (descending continuation),
/// measures layer sizes, and regresses ln(layer) on ln(nu).
struct LayerScalingResult {
  std::vector<LayerMeasurement> measurements;
  double slope = 0.0;
};
LayerScalingResult layer_scaling(std::span<const double> nu_list, double delta = 0.05);

/// Least-squares slope of ln(y) on ln(x); shared with the scaling tests.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace serrin::viscous

#endif  // SERRIN_SOLVER_VISCOUS_HPP
