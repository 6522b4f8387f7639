#include "serrin/quadrature.hpp"

#include <cmath>

namespace serrin {

namespace {

// 15-point Kronrod extension of 7-point Gauss on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double k15;
  double err;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b, long& evals) {
  const double c = 0.5 * (a + b);
  const double hw = 0.5 * (b - a);
  double resk = 0.0, resg = 0.0;
  for (int j = 0; j < 8; ++j) {
    if (j == 7) {
      const double fv = f(c);
      ++evals;
      resk += kWgk[7] * fv;
      resg += kWg[3] * fv;
      break;
    }
    const double x = hw * kXgk[j];
    const double f1 = f(c - x);
    const double f2 = f(c + x);
    evals += 2;
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  return {resk * hw, std::abs((resk - resg) * hw)};
}

struct Accumulator {
  double value = 0.0;
  double err = 0.0;
  bool converged = true;
};

void refine(const std::function<double(double)>& f, double a, double b, double tol, int depth,
            int max_depth, Accumulator& acc, long& evals) {
  const PanelResult p = gk15(f, a, b, evals);
  if (p.err <= tol || depth >= max_depth) {
    acc.value += p.k15;
    acc.err += p.err;
    if (p.err > tol) acc.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  refine(f, a, mid, 0.5 * tol, depth + 1, max_depth, acc, evals);
  refine(f, mid, b, 0.5 * tol, depth + 1, max_depth, acc, evals);
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, int max_depth) {
  Accumulator acc;
  long evals = 0;
  refine(f, a, b, abs_tol, 0, max_depth, acc, evals);
  return {acc.value, acc.err, acc.converged, evals};
}

}  // namespace serrin
