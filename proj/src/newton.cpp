#include "serrin/newton.hpp"

#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>

namespace serrin {

namespace {

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double e : v) m = std::max(m, std::abs(e));
  return m;
}

bool all_finite(std::span<const double> v) {
  for (double e : v) {
    if (!std::isfinite(e)) return false;
  }
  return true;
}

}  // namespace

NewtonResult damped_newton(std::vector<double> x0, const ResidualFn& residual, int radius,
                           const NewtonOptions& opts, const ValidityFn& valid) {
  const int n = static_cast<int>(x0.size());
  const int stride = 2 * radius + 1;

  std::vector<double> x = std::move(x0);
  std::vector<double> r = residual(x);
  if (static_cast<int>(r.size()) != n) {
    throw std::invalid_argument("damped_newton: residual size must match unknown count");
  }
  double rnorm = sup_norm(r);

  for (int iter = 0; iter < opts.max_iter; ++iter) {
    if (rnorm <= opts.tol && all_finite(r)) {
      return {std::move(x), rnorm, iter};
    }
    if (!all_finite(r)) {
      throw NonConvergenceError("damped_newton: non-finite residual", rnorm, iter);
    }

    // grouped column-wise finite differences; columns of one color cannot
    // influence a common residual row
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(n) * (2 * radius + 1));
    std::vector<double> xp(x);
    for (int color = 0; color < stride && color < n; ++color) {
      std::vector<double> deltas(n, 0.0);
      for (int j = color; j < n; j += stride) {
        deltas[j] = 1.4901161193847656e-08 * (1.0 + std::abs(x[j]));  // sqrt(eps)
        xp[j] = x[j] + deltas[j];
      }
      const std::vector<double> rp = residual(xp);
      for (int j = color; j < n; j += stride) {
        const int lo = std::max(0, j - radius);
        const int hi = std::min(n - 1, j + radius);
        for (int i = lo; i <= hi; ++i) {
          const double der = (rp[i] - r[i]) / deltas[j];
          if (der != 0.0) trip.emplace_back(i, j, der);
        }
        xp[j] = x[j];
      }
    }

    Eigen::SparseMatrix<double> J(n, n);
    J.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(J);
    if (lu.info() != Eigen::Success) {
      throw NonConvergenceError("damped_newton: singular Jacobian", rnorm, iter);
    }
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) rhs(i) = -r[i];
    const Eigen::VectorXd step = lu.solve(rhs);

    double lambda = 1.0;
    bool accepted = false;
    for (int bt = 0; bt <= opts.max_backtracks; ++bt) {
      std::vector<double> xt(n);
      for (int i = 0; i < n; ++i) xt[i] = x[i] + lambda * step(i);
      if (!valid || valid(xt)) {
        std::vector<double> rt = residual(xt);
        const double rtnorm = sup_norm(rt);
        if (std::isfinite(rtnorm) && rtnorm < rnorm) {
          x = std::move(xt);
          r = std::move(rt);
          rnorm = rtnorm;
          accepted = true;
          break;
        }
      }
      lambda *= 0.5;
    }
    if (!accepted) {
      throw NonConvergenceError("damped_newton: line search failed to reduce the residual", rnorm,
                                iter + 1);
    }
  }
  if (rnorm <= opts.tol) {
    return {std::move(x), rnorm, opts.max_iter};
  }
  throw NonConvergenceError("damped_newton: iteration limit reached", rnorm, opts.max_iter);
}

}  // namespace serrin
