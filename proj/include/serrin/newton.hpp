#ifndef SERRIN_NEWTON_HPP
#define SERRIN_NEWTON_HPP

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace serrin {

struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& what, double residual, int iterations)
      : std::runtime_error(what), last_residual(residual), iters(iterations) {}
  double last_residual;
  int iters;
};

struct NewtonOptions {
  double tol = 1e-10;      // sup-norm of the scaled residual
  int max_iter = 50;
  int max_backtracks = 30; // step-halving limit per iteration
};

struct NewtonResult {
  std::vector<double> x;
  double residual_norm = 0.0;
  int iters = 0;
};

using ResidualFn = std::function<std::vector<double>(std::span<const double>)>;
using ValidityFn = std::function<bool(std::span<const double>)>;

/// Damped Newton iteration on a square system whose Jacobian is banded:
/// residual row i depends only on unknowns j with |i - j| <= radius. The
/// Jacobian is assembled by grouped (colored) column-wise finite differences
/// and factored sparsely. Backtracking halves the step until the residual
/// norm decreases and the iterate stays valid.
///
/// Throws NonConvergenceError when max_iter is exhausted or no acceptable
/// step exists.
NewtonResult damped_newton(std::vector<double> x0, const ResidualFn& residual, int radius,
                           const NewtonOptions& opts, const ValidityFn& valid = {});

}  // namespace serrin

#endif  // SERRIN_NEWTON_HPP
