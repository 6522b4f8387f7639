#include "serrin/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace serrin {

Mesh::Mesh(double step) : h(step) {
  if (!(step > 0.0) || step > 0.5) throw std::invalid_argument("Mesh: step must be in (0, 0.5]");
  n = static_cast<int>(std::llround(1.0 / step));
  if (std::abs(n * step - 1.0) > 1e-12) {
    throw std::invalid_argument("Mesh: step must divide [0,1] uniformly (n*h = 1 within 1e-12)");
  }
}

std::vector<double> Mesh::nodes() const {
  std::vector<double> x(n + 1);
  for (int i = 0; i <= n; ++i) x[i] = node(i);
  return x;
}

std::vector<double> fd_weights(double z, std::span<const double> x, int m) {
  const int nd = static_cast<int>(x.size()) - 1;
  if (nd < m) throw std::invalid_argument("fd_weights: need at least m+1 nodes");
  // Fornberg's recursion; c[i][k] holds the weight of node i for order k.
  std::vector<std::vector<double>> c(nd + 1, std::vector<double>(m + 1, 0.0));
  c[0][0] = 1.0;
  double c1 = 1.0;
  double c4 = x[0] - z;
  for (int i = 1; i <= nd; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) {
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        }
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) {
        c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      }
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(nd + 1);
  for (int i = 0; i <= nd; ++i) w[i] = c[i][m];
  return w;
}

std::vector<double> derivative_table(std::span<const double> v, double h, int order) {
  if (order < 1 || order > 4) throw std::invalid_argument("derivative_table: order must be 1..4");
  const int n = static_cast<int>(v.size()) - 1;
  const int half = order <= 2 ? 1 : 2;
  const int onesided = order + 3;  // width giving at least O(h^2) one-sided
  if (n + 1 < onesided) throw std::invalid_argument("derivative_table: too few samples");

  std::vector<double> out(n + 1);
  // offsets in index space; weights scale with 1/h^order
  auto apply = [&](int i, int lo, int hi) {
    std::vector<double> xs(hi - lo + 1);
    for (int j = lo; j <= hi; ++j) xs[j - lo] = (j - i) * h;
    const std::vector<double> w = fd_weights(0.0, xs, order);
    double s = 0.0;
    for (int j = lo; j <= hi; ++j) s += w[j - lo] * v[j];
    return s;
  };
  for (int i = 0; i <= n; ++i) {
    if (i - half >= 0 && i + half <= n) {
      out[i] = apply(i, i - half, i + half);
    } else if (i - half < 0) {
      out[i] = apply(i, 0, onesided - 1);
    } else {
      out[i] = apply(i, n - onesided + 1, n);
    }
  }
  return out;
}

}  // namespace serrin
