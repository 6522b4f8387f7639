#include "serrin/solver_viscous.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace serrin::viscous {

namespace {

constexpr int kRadius = 7;  // interleaved (F, Omega) dependency distance

// Residual layout, unknowns u[2k] = F_{k+1}, u[2k+1] = Omega_{k+1}:
//   F slot k = 0:      F'(0) = 0           (one-sided, 2h-folded)
//   F slot k = 1:      F''(x_1) = closure  (h^2-folded)
//   F slot k = 2..n-2: momentum equation at node k (h^4-folded)
//   Omega slot k:      azimuthal equation at node k+1 (h^2-folded)
std::vector<double> viscous_residual(std::span<const double> u, const ViscousProblem& prob) {
  const Mesh& mesh = prob.mesh;
  const int n = mesh.n;
  const double nu = prob.nu;
  const double h = mesh.h;

  auto F = [&](int i) -> double {
    if (i == 0 || i == n) return 0.0;
    return u[2 * (i - 1)];
  };
  auto O = [&](int i) -> double {
    if (i == 0) return 0.0;
    if (i == n) return prob.c_omega;
    return u[2 * (i - 1) + 1];
  };

  std::vector<double> r(2 * (n - 1));
  // F block
  r[0] = -3.0 * F(0) + 4.0 * F(1) - F(2);                       // 2h F'(0)
  r[2] = (F(0) - 2.0 * F(1) + F(2)) - h * h * prob.closure;     // h^2 (F''(x1) - closure)
  for (int i = 2; i <= n - 2; ++i) {
    const double x = mesh.node(i);
    const double w = (1.0 - x) * (1.0 + x);
    const double W4 = F(i - 2) - 4.0 * F(i - 1) + 6.0 * F(i) - 4.0 * F(i + 1) + F(i + 2);
    const double W3 = 0.5 * (-F(i - 2) + 2.0 * F(i - 1) - 2.0 * F(i + 1) + F(i + 2));
    const double W2 = F(i - 1) - 2.0 * F(i) + F(i + 1);
    const double W1 = 0.5 * (F(i + 1) - F(i - 1));
    const double W1o = 0.5 * (O(i + 1) - O(i - 1));
    r[2 * i] = nu * w * W4 - 4.0 * nu * x * h * W3 + h * F(i) * W3 + 3.0 * h * W1 * W2 +
               2.0 * h * h * h * O(i) * W1o / w;
  }
  // Omega block
  for (int i = 1; i <= n - 1; ++i) {
    const double x = mesh.node(i);
    const double w = (1.0 - x) * (1.0 + x);
    r[2 * (i - 1) + 1] =
        nu * w * (O(i - 1) - 2.0 * O(i) + O(i + 1)) + h * F(i) * 0.5 * (O(i + 1) - O(i - 1));
  }
  return r;
}

std::vector<double> pack(std::span<const double> F, std::span<const double> O) {
  const int n = static_cast<int>(F.size()) - 1;
  std::vector<double> u(2 * (n - 1));
  for (int i = 1; i <= n - 1; ++i) {
    u[2 * (i - 1)] = F[i];
    u[2 * (i - 1) + 1] = O[i];
  }
  return u;
}

// Smooth guess: outer inviscid shape with a no-slip mollifier of width ell.
void default_guess(const ViscousProblem& prob, std::vector<double>& F, std::vector<double>& O) {
  const int n = prob.mesh.n;
  const double ell = std::max(4.0 * prob.mesh.h, std::pow(prob.nu, 2.0 / 3.0));
  F.assign(n + 1, 0.0);
  O.assign(n + 1, 0.0);
  for (int i = 0; i <= n; ++i) {
    const double x = prob.mesh.node(i);
    const double m = 1.0 - std::exp(-x / ell);
    F[i] = std::sqrt(std::max(0.0, x * (1.0 - x))) * m * m;
    O[i] = prob.c_omega * m;
  }
  F[0] = 0.0;
  F[n] = 0.0;
  O[0] = 0.0;
  O[n] = prob.c_omega;
}

Profile build_profile(const ViscousProblem& prob, const std::vector<double>& F,
                      const std::vector<double>& O) {
  auto Fc = std::make_shared<SampledComponent>(0.0, prob.mesh.h, F);
  auto Gc = continuity_G_from_F(Fc, 1.0);
  auto Oc = std::make_shared<SampledComponent>(0.0, prob.mesh.h, O);
  return Profile(VortexParams(1.0, prob.nu, prob.c_omega), ProfileCase::Upper,
                 ProfileKind::Sampled, std::move(Fc), std::move(Gc), std::move(Oc));
}

}  // namespace

ViscousProblem::ViscousProblem(double nu_, Mesh mesh_, double closure_, double c_omega_)
    : nu(nu_), c_omega(c_omega_), mesh(mesh_), closure(closure_) {
  if (!(nu > 0.0)) throw std::invalid_argument("ViscousProblem: nu must be positive");
}

Mesh layer_resolving_mesh(double nu) {
  const double target = std::min(nu / 4.0, 2.5e-3);
  const int n = static_cast<int>(std::ceil(1.0 / target));
  return Mesh(1.0 / n);
}

ViscousSolution solve_serrin_b1(const ViscousProblem& prob, std::span<const double> F0,
                                std::span<const double> Omega0) {
  const int n = prob.mesh.n;
  if (static_cast<int>(F0.size()) != n + 1 || static_cast<int>(Omega0.size()) != n + 1) {
    throw std::invalid_argument("solve_serrin_b1: guess must cover all mesh nodes");
  }
  auto residual = [&prob](std::span<const double> u) { return viscous_residual(u, prob); };
  NewtonResult res = damped_newton(pack(F0, Omega0), residual, kRadius, prob.newton);

  std::vector<double> F(n + 1, 0.0), O(n + 1, 0.0);
  for (int i = 1; i <= n - 1; ++i) {
    F[i] = res.x[2 * (i - 1)];
    O[i] = res.x[2 * (i - 1) + 1];
  }
  O[n] = prob.c_omega;
  Profile upper = build_profile(prob, F, O);
  return {std::move(F), std::move(O), res.residual_norm, res.iters, prob.closure,
          std::move(upper)};
}

ViscousSolution solve_serrin_b1(const ViscousProblem& prob) {
  std::vector<double> F, O;
  default_guess(prob, F, O);
  try {
    return solve_serrin_b1(prob, F, O);
  } catch (const NonConvergenceError&) {
    // viscosity continuation from a softer problem
    std::vector<double> Fw = F, Ow = O;
    for (double factor : {8.0, 4.0, 2.0, 1.0}) {
      ViscousProblem step = prob;
      step.nu = prob.nu * factor;
      step.closure = prob.closure / factor;
      ViscousSolution sol = solve_serrin_b1(step, Fw, Ow);
      Fw = sol.F;
      Ow = sol.Omega;
      if (factor == 1.0) return sol;
    }
    throw;
  }
}

CalibrationRecord calibrate_closure(ViscousProblem prob) {
  CalibrationRecord rec;
  const int lo = static_cast<int>(std::ceil(0.50 / prob.mesh.h));
  const int hi = static_cast<int>(std::floor(0.95 / prob.mesh.h));

  std::vector<double> Fw, Ow;
  bool have_warm = false;
  auto objective = [&](double closure) -> double {
    prob.closure = closure;
    ViscousSolution sol = have_warm ? solve_serrin_b1(prob, Fw, Ow) : solve_serrin_b1(prob);
    Fw = sol.F;
    Ow = sol.Omega;
    have_warm = true;
    double s = 0.0;
    for (int i = lo; i <= hi; ++i) {
      const double d = sol.Omega[i] - prob.c_omega;
      s += d * d;
    }
    return s * prob.mesh.h;
  };

  // coarse geometric scan of closure = a / nu, then golden-section refinement
  double best_c = 0.0, best_j = std::numeric_limits<double>::infinity();
  for (double a : {0.0625, 0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double cl = a / prob.nu;
    try {
      const double j = objective(cl);
      rec.closure_tried.push_back(cl);
      rec.objective.push_back(j);
      if (j < best_j) {
        best_j = j;
        best_c = cl;
      }
    } catch (const NonConvergenceError&) {
      have_warm = false;
    }
  }
  if (!std::isfinite(best_j)) {
    throw NonConvergenceError("calibrate_closure: no closure candidate converged", 0.0, 0);
  }

  double a = best_c / 2.0, b = best_c * 2.0;
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double j1 = objective(x1), j2 = objective(x2);
  for (int it = 0; it < 20; ++it) {
    if (j1 < j2) {
      b = x2;
      x2 = x1;
      j2 = j1;
      x1 = b - gr * (b - a);
      j1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      j1 = j2;
      x2 = a + gr * (b - a);
      j2 = objective(x2);
    }
  }
  rec.best_closure = j1 < j2 ? x1 : x2;
  rec.best_objective = std::min(j1, j2);
  rec.closure_tried.push_back(rec.best_closure);
  rec.objective.push_back(rec.best_objective);
  return rec;
}

double layer_size(const Profile& profile, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("layer_size: delta in (0,1)");
  const double c_omega = profile.params().c_omega;
  const Component& O = profile.azimuthal();
  const double lo = O.domain_lo();
  const double hi = O.domain_hi();
  const int samples = 4000;
  const double threshold = delta * std::abs(c_omega);

  double prev_x = hi;
  double prev_dev = std::abs(O(hi) - c_omega);
  if (prev_dev > threshold) {
    throw std::runtime_error("layer_size: Omega does not settle to C_omega near the axis");
  }
  for (int i = 1; i <= samples; ++i) {
    const double x = hi - (hi - lo) * i / samples;
    const double dev = std::abs(O(x) - c_omega);
    if (dev > threshold) {
      // linear interpolation of the crossing between x and prev_x
      const double t = (threshold - prev_dev) / (dev - prev_dev);
      return prev_x + t * (x - prev_x);
    }
    prev_x = x;
    prev_dev = dev;
  }
  return 0.0;  // deviation never exceeds the threshold
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("loglog_slope: need matching samples, at least two");
  }
  const int n = static_cast<int>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::runtime_error("loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

LayerScalingResult layer_scaling(std::span<const double> nu_list, double delta) {
  if (nu_list.size() < 4) {
    throw std::invalid_argument("layer_scaling: need at least 4 viscosity values");
  }
  std::vector<double> nus(nu_list.begin(), nu_list.end());
  std::sort(nus.rbegin(), nus.rend());  // descending for continuation
  if (nus.front() / nus.back() < 10.0) {
    throw std::invalid_argument("layer_scaling: viscosities must span at least a decade");
  }

  LayerScalingResult out;
  for (double nu : nus) {
    ViscousProblem prob(nu, layer_resolving_mesh(nu));
    const CalibrationRecord rec = calibrate_closure(prob);
    prob.closure = rec.best_closure;
    const ViscousSolution sol = solve_serrin_b1(prob);
    out.measurements.push_back({nu, layer_size(sol.upper, delta), delta});
  }
  if (out.measurements.size() < 4) {
    throw std::runtime_error("layer_scaling: fewer than 4 successful solves");
  }
  std::vector<double> xs, ys;
  for (const auto& m : out.measurements) {
    xs.push_back(m.nu);
    ys.push_back(m.layer_x);
  }
  out.slope = loglog_slope(xs, ys);
  return out;
}

}  // namespace serrin::viscous
