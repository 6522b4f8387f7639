#ifndef SERRIN_SOLVER_INVISCID_HPP
#define SERRIN_SOLVER_INVISCID_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "serrin/newton.hpp"
#include "serrin/profile.hpp"

namespace serrin::inviscid {

/// Two-point BVP for p = gamma^2 on the uniform mesh, 0 < b < 1, with
/// p(0) = 0, p(1) = 1 imposed strongly and the third-order collocation
/// equation at every interior node.
struct InviscidProblem {
  double b;
  double c;  // swirl-ratio constant, > 0
  Mesh mesh;
  NewtonOptions newton{1e-10, 50, 30};

  InviscidProblem(double b_, double c_, Mesh mesh_);
};

struct PSolution {
  std::vector<double> p;  // all nodes 0..n, boundaries included
  double residual_norm;   // sup of the h^3-scaled collocation residual
  int newton_iters;
};

/// p0(x) = (2x/(1+x))^(2-b): the normalized square of gamma0 built from the
/// explicit pair (f0, Omega0).
std::vector<double> initial_guess(double b, const Mesh& mesh);

/// h^3-scaled collocation residual at the interior nodes. The fractional
/// power of p is evaluated with p clamped below at 0; iterates with
/// min p < -1e-12 are rejected by the line search, not here.
std::vector<double> assemble_residual(std::span<const double> p_full,
                                      const InviscidProblem& prob);

/// Damped Newton on the discretized equation. Throws NonConvergenceError,
/// which signals possible (b, c) infeasibility for large c.
PSolution newton_solve(const InviscidProblem& prob, std::vector<double> guess_full);

/// Profiles recovered from p, normalized to the physical frame Omega(1) = 1:
///   f = sqrt(p) (1-x^2)^((2-b)/2) / c,   Omega = p^((1-b)/(2(2-b))),
/// g from continuity. `lower` lives on the full mesh; `upper` starts at x = h
/// (G is singular at the ground).
struct InviscidSolution {
  PSolution p_solution;
  Profile lower;
  Profile upper;
};
Profile recover_profile(const PSolution& sol, const InviscidProblem& prob);
InviscidSolution solve(const InviscidProblem& prob);
InviscidSolution solve(const InviscidProblem& prob, std::vector<double> guess_full);

/// Warm-start continuation over an increasing b list at fixed c. Failed
/// entries are recorded and the sweep continues (cold-starting the next
/// entry). dist_to_b1 is the sup-norm distance of (F, Omega) to the b = 1
/// closed form with C1 = sqrt(2)/c, C_omega = 1 on interior nodes.
struct SweepEntry {
  double b;
  std::optional<InviscidSolution> solution;
  std::string error;  // empty on success
  double dist_to_b1 = 0.0;
};
std::vector<SweepEntry> sweep_b(std::span<const double> b_list, double c, const Mesh& mesh,
                                const NewtonOptions& opts = {1e-10, 50, 30});

/// Same continuation in c at fixed b (used by the c-sweep command).
std::vector<SweepEntry> sweep_c(double b, std::span<const double> c_list, const Mesh& mesh,
                                const NewtonOptions& opts = {1e-10, 50, 30});

}  // namespace serrin::inviscid

#endif  // SERRIN_SOLVER_INVISCID_HPP
