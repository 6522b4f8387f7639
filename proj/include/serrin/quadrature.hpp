#ifndef SERRIN_QUADRATURE_HPP
#define SERRIN_QUADRATURE_HPP

#include <functional>
#include <stdexcept>

namespace serrin {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
  long evaluations = 0;
};

/// Adaptive Gauss-Kronrod (G7, K15) with recursive bisection.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol = 1e-9, int max_depth = 60);

}  // namespace serrin

#endif  // SERRIN_QUADRATURE_HPP
