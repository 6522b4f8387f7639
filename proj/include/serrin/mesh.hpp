#ifndef SERRIN_MESH_HPP
#define SERRIN_MESH_HPP

#include <span>
#include <vector>

namespace serrin {

/// Uniform grid on [0, 1] with step h: nodes x_i = i h, i = 0..n, n h = 1.
struct Mesh {
  double h;
  int n;  // number of intervals; n + 1 nodes

  explicit Mesh(double step);

  double node(int i) const { return i * h; }
  int node_count() const { return n + 1; }
  std::vector<double> nodes() const;
};

/// Fornberg finite-difference weights: returns w such that
///   f^(m)(z) ~= sum_i w[i] f(nodes[i]).
/// Nodes need not be uniform or sorted; nodes.size() >= m + 1.
std::vector<double> fd_weights(double z, std::span<const double> nodes, int m);

/// Derivative table of the given order from uniform samples, second-order
/// stencils: centered in the interior, biased one-sided stencils at the
/// nodes nearest each boundary. Result is aligned with the input samples.
std::vector<double> derivative_table(std::span<const double> values, double h, int order);

}  // namespace serrin

#endif  // SERRIN_MESH_HPP
