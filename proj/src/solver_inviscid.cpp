#include "serrin/solver_inviscid.hpp"

#include <algorithm>
#include <cmath>

#include "serrin/analytic.hpp"

namespace serrin::inviscid {

namespace {

constexpr int kRadius = 4;  // one-sided third-derivative stencils reach 4 nodes

double pow_clamped(double p, double e) {
  return std::exp(e * std::log(std::max(p, 1e-300)));
}

// h^3-folded one-sided third-derivative weights on unit-spaced offsets.
std::vector<double> onesided_d3_weights(bool left) {
  std::vector<double> offs(6);
  for (int k = 0; k < 6; ++k) offs[k] = left ? (k - 1.0) : (1.0 - k);
  return fd_weights(0.0, offs, 3);
}

}  // namespace

InviscidProblem::InviscidProblem(double b_, double c_, Mesh mesh_)
    : b(b_), c(c_), mesh(mesh_) {
  if (!(b > 0.0 && b < 1.0)) {
    throw std::invalid_argument(
        "InviscidProblem: b must lie in (0,1); solutions with 1 < b < 2 violate Rayleigh's "
        "circulation criterion and b >= 2 admits no nontrivial solutions");
  }
  if (!(c > 0.0)) throw std::invalid_argument("InviscidProblem: c must be positive");
}

std::vector<double> initial_guess(double b, const Mesh& mesh) {
  std::vector<double> p(mesh.node_count());
  for (int i = 0; i <= mesh.n; ++i) {
    const double x = mesh.node(i);
    p[i] = std::pow(2.0 * x / (1.0 + x), 2.0 - b);
  }
  p[0] = 0.0;
  p[mesh.n] = 1.0;
  return p;
}

std::vector<double> assemble_residual(std::span<const double> p, const InviscidProblem& prob) {
  const Mesh& mesh = prob.mesh;
  const int n = mesh.n;
  if (static_cast<int>(p.size()) != n + 1) {
    throw std::invalid_argument("assemble_residual: expected node values including boundaries");
  }
  const double b = prob.b;
  const double c2 = prob.c * prob.c;
  const double h = mesh.h;
  const double e = (3.0 - 2.0 * b) / (2.0 - b);
  static const std::vector<double> d3_left = onesided_d3_weights(true);
  static const std::vector<double> d3_right = onesided_d3_weights(false);

  std::vector<double> r(n - 1);
  for (int i = 1; i < n; ++i) {
    const double x = mesh.node(i);
    const double w = (1.0 - x) * (1.0 + x);
    const double P = p[i];
    const double P1 = 0.5 * (p[i + 1] - p[i - 1]);          // h p'
    const double P2 = p[i - 1] - 2.0 * P + p[i + 1];        // h^2 p''
    double P3;                                              // h^3 p'''
    if (i >= 2 && i <= n - 2) {
      P3 = 0.5 * (-p[i - 2] + 2.0 * p[i - 1] - 2.0 * p[i + 1] + p[i + 2]);
    } else if (i == 1) {
      P3 = 0.0;
      for (int k = 0; k < 6; ++k) P3 += d3_left[k] * p[k];
    } else {
      P3 = 0.0;
      for (int k = 0; k < 6; ++k) P3 += d3_right[k] * p[n - k];
    }
    r[i - 1] = P * P *
                   (w * (w * P3 - 2.0 * (4.0 - b) * x * h * P2) -
                    2.0 * (2.0 + b - 3.0 * (2.0 - b) * x * x) * h * h * P1) +
               2.0 * c2 * (1.0 - b) * pow_clamped(P, e) * h * h * P1 +
               (1.0 - b) / (2.0 - b) * w * P1 *
                   (w * P1 * P1 - 2.0 * P * (w * P2 - (2.0 - b) * x * h * P1));
  }
  return r;
}

PSolution newton_solve(const InviscidProblem& prob, std::vector<double> guess_full) {
  const int n = prob.mesh.n;
  if (static_cast<int>(guess_full.size()) != n + 1) {
    throw std::invalid_argument("newton_solve: guess must include boundary nodes");
  }
  guess_full[0] = 0.0;
  guess_full[n] = 1.0;

  std::vector<double> interior(guess_full.begin() + 1, guess_full.end() - 1);
  auto assemble = [&prob, n](std::span<const double> u) {
    std::vector<double> full(n + 1);
    full[0] = 0.0;
    full[n] = 1.0;
    std::copy(u.begin(), u.end(), full.begin() + 1);
    return assemble_residual(full, prob);
  };
  auto valid = [](std::span<const double> u) {
    for (double v : u) {
      if (!(v >= -1e-12)) return false;
    }
    return true;
  };

  NewtonResult res = damped_newton(std::move(interior), assemble, kRadius, prob.newton, valid);

  PSolution out;
  out.p.assign(n + 1, 0.0);
  out.p[n] = 1.0;
  std::copy(res.x.begin(), res.x.end(), out.p.begin() + 1);
  out.residual_norm = res.residual_norm;
  out.newton_iters = res.iters;
  return out;
}

Profile recover_profile(const PSolution& sol, const InviscidProblem& prob) {
  const Mesh& mesh = prob.mesh;
  const int n = mesh.n;
  const double b = prob.b;
  const double c = prob.c;
  const double kappa = (1.0 - b) / (2.0 * (2.0 - b));

  std::vector<double> f(n + 1), omega(n + 1);
  for (int i = 0; i <= n; ++i) {
    const double x = mesh.node(i);
    const double w = std::max(0.0, (1.0 - x) * (1.0 + x));
    const double p = std::max(0.0, sol.p[i]);
    f[i] = std::sqrt(p) * std::pow(w, (2.0 - b) / 2.0) / c;
    omega[i] = std::pow(p, kappa) * std::pow(w, (1.0 - b) / 2.0);
  }
  auto fc = std::make_shared<SampledComponent>(0.0, mesh.h, std::move(f));
  auto gc = continuity_g_from_f(fc, b);
  auto oc = std::make_shared<SampledComponent>(0.0, mesh.h, std::move(omega));
  return Profile(VortexParams(b, 0.0, 1.0), ProfileCase::Lower, ProfileKind::Sampled,
                 std::move(fc), std::move(gc), std::move(oc));
}

namespace {

Profile recover_upper(const PSolution& sol, const InviscidProblem& prob) {
  const Mesh& mesh = prob.mesh;
  const int n = mesh.n;
  const double b = prob.b;
  const double c = prob.c;
  const double kappa = (1.0 - b) / (2.0 * (2.0 - b));

  // p' table for the G formula; built on the full grid, consumed from node 1
  const std::vector<double> dp = derivative_table(sol.p, mesh.h, 1);

  std::vector<double> F(n), G(n), O(n);  // nodes 1..n
  for (int i = 1; i <= n; ++i) {
    const double x = mesh.node(i);
    const double w = std::max(0.0, (1.0 - x) * (1.0 + x));
    const double p = std::max(0.0, sol.p[i]);
    const double sq = std::sqrt(p);
    F[i - 1] = sq * std::sqrt(w) / c;
    O[i - 1] = std::pow(p, kappa);
    // G = [p' (1-x^2) / (2 sqrt(p)) - (2-b) x sqrt(p)] / (c (2-b))
    G[i - 1] = (dp[i] * w / (2.0 * std::max(sq, 1e-300)) - (2.0 - b) * x * sq) / (c * (2.0 - b));
  }
  auto Fc = std::make_shared<SampledComponent>(mesh.h, mesh.h, std::move(F));
  auto Gc = std::make_shared<SampledComponent>(mesh.h, mesh.h, std::move(G));
  auto Oc = std::make_shared<SampledComponent>(mesh.h, mesh.h, std::move(O));
  return Profile(VortexParams(b, 0.0, 1.0), ProfileCase::Upper, ProfileKind::Sampled,
                 std::move(Fc), std::move(Gc), std::move(Oc));
}

double distance_to_b1(const InviscidSolution& sol, double c) {
  const analytic::ClosedFormSolution ref = analytic::inviscid_b1(std::sqrt(2.0) / c, 1.0);
  const auto* F = dynamic_cast<const SampledComponent*>(&sol.upper.meridional());
  const auto* O = dynamic_cast<const SampledComponent*>(&sol.upper.azimuthal());
  double dist = 0.0;
  const int m = F->size();
  for (int i = 0; i < m; ++i) {
    const double x = F->x0() + i * F->h();
    if (x >= 1.0 - F->h() / 2.0) break;  // skip the axis node
    dist = std::max(dist, std::abs(F->table(0)[i] - ref.profile.meridional()(x)));
    dist = std::max(dist, std::abs(O->table(0)[i] - ref.profile.azimuthal()(x)));
  }
  return dist;
}

}  // namespace

InviscidSolution solve(const InviscidProblem& prob, std::vector<double> guess_full) {
  PSolution ps = newton_solve(prob, std::move(guess_full));
  Profile lower = recover_profile(ps, prob);
  Profile upper = recover_upper(ps, prob);
  return {std::move(ps), std::move(lower), std::move(upper)};
}

InviscidSolution solve(const InviscidProblem& prob) {
  return solve(prob, initial_guess(prob.b, prob.mesh));
}

std::vector<SweepEntry> sweep_b(std::span<const double> b_list, double c, const Mesh& mesh,
                                const NewtonOptions& opts) {
  std::vector<SweepEntry> out;
  std::vector<double> warm;
  for (double b : b_list) {
    SweepEntry entry;
    entry.b = b;
    try {
      InviscidProblem prob(b, c, mesh);
      prob.newton = opts;
      std::vector<double> guess = warm.empty() ? initial_guess(b, mesh) : warm;
      InviscidSolution sol = solve(prob, std::move(guess));
      warm = sol.p_solution.p;
      entry.dist_to_b1 = distance_to_b1(sol, c);
      entry.solution = std::move(sol);
    } catch (const std::exception& ex) {
      entry.error = ex.what();
      warm.clear();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<SweepEntry> sweep_c(double b, std::span<const double> c_list, const Mesh& mesh,
                                const NewtonOptions& opts) {
  std::vector<SweepEntry> out;
  std::vector<double> warm;
  for (double c : c_list) {
    SweepEntry entry;
    entry.b = b;
    try {
      InviscidProblem prob(b, c, mesh);
      prob.newton = opts;
      std::vector<double> guess = warm.empty() ? initial_guess(b, mesh) : warm;
      InviscidSolution sol = solve(prob, std::move(guess));
      warm = sol.p_solution.p;
      entry.dist_to_b1 = distance_to_b1(sol, c);
      entry.solution = std::move(sol);
    } catch (const std::exception& ex) {
      entry.error = ex.what();
      warm.clear();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace serrin::inviscid
