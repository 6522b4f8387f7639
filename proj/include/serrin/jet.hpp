#ifndef SERRIN_JET_HPP
#define SERRIN_JET_HPP

#include <array>
#include <cmath>
#include <stdexcept>

namespace serrin {

/// Truncated Taylor expansion of a scalar function at a point: value plus
/// derivatives 1..kOrder. Arithmetic on jets propagates derivatives through
/// products, quotients and powers exactly (up to rounding), so closed-form
/// profiles expose derivative stacks without hand-differentiated formulas.
///
/// Coefficients are stored Taylor-style, c[k] = f^(k)(x0) / k!.
class Jet {
 public:
  static constexpr int kOrder = 5;
  static constexpr int kLen = kOrder + 1;

  Jet() { c_.fill(0.0); }

  static Jet constant(double v) {
    Jet j;
    j.c_[0] = v;
    return j;
  }

  /// Seed for the independent variable: value x, first derivative 1.
  static Jet variable(double x) {
    Jet j;
    j.c_[0] = x;
    j.c_[1] = 1.0;
    return j;
  }

  double value() const { return c_[0]; }

  /// k-th derivative, 0 <= k <= kOrder.
  double deriv(int k) const {
    if (k < 0 || k > kOrder) throw std::out_of_range("Jet::deriv: order out of range");
    return c_[k] * factorial(k);
  }

  double coeff(int k) const { return c_[k]; }
  double& coeff(int k) { return c_[k]; }

  static double factorial(int k) {
    static constexpr std::array<double, kLen> f = {1.0, 1.0, 2.0, 6.0, 24.0, 120.0};
    return f[k];
  }

 private:
  std::array<double, kLen> c_;
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) r.coeff(k) = a.coeff(k) - b.coeff(k);
  return r;
}

inline Jet operator-(const Jet& a) {
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) r.coeff(k) = -a.coeff(k);
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) {
    double s = 0.0;
    for (int j = 0; j <= k; ++j) s += a.coeff(j) * b.coeff(k - j);
    r.coeff(k) = s;
  }
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  if (b.coeff(0) == 0.0) {
    Jet r;
    for (int k = 0; k < Jet::kLen; ++k) r.coeff(k) = a.coeff(k) / b.coeff(0);
    return r;  // propagate inf/nan rather than throw; poles are reported upstream
  }
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) {
    double s = a.coeff(k);
    for (int j = 1; j <= k; ++j) s -= b.coeff(j) * r.coeff(k - j);
    r.coeff(k) = s / b.coeff(0);
  }
  return r;
}

inline Jet operator+(const Jet& a, double s) { return a + Jet::constant(s); }
inline Jet operator+(double s, const Jet& a) { return a + Jet::constant(s); }
inline Jet operator-(const Jet& a, double s) { return a - Jet::constant(s); }
inline Jet operator-(double s, const Jet& a) { return Jet::constant(s) - a; }

inline Jet operator*(const Jet& a, double s) {
  Jet r;
  for (int k = 0; k < Jet::kLen; ++k) r.coeff(k) = a.coeff(k) * s;
  return r;
}
inline Jet operator*(double s, const Jet& a) { return a * s; }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
inline Jet operator/(double s, const Jet& a) { return Jet::constant(s) / a; }

/// u^q for real q via the power-series recurrence; requires u(x0) > 0
/// (non-finite coefficients result otherwise, mirroring the pole).
inline Jet pow(const Jet& u, double q) {
  Jet w;
  const double u0 = u.coeff(0);
  w.coeff(0) = std::pow(u0, q);
  for (int k = 1; k < Jet::kLen; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += ((q + 1.0) * j - k) * u.coeff(j) * w.coeff(k - j);
    w.coeff(k) = s / (k * u0);
  }
  return w;
}

inline Jet sqrt(const Jet& u) { return pow(u, 0.5); }

inline Jet exp(const Jet& u) {
  Jet e;
  e.coeff(0) = std::exp(u.coeff(0));
  for (int k = 1; k < Jet::kLen; ++k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += j * u.coeff(j) * e.coeff(k - j);
    e.coeff(k) = s / k;
  }
  return e;
}

inline Jet log(const Jet& u) {
  Jet l;
  l.coeff(0) = std::log(u.coeff(0));
  for (int k = 1; k < Jet::kLen; ++k) {
    double s = u.coeff(k);
    for (int j = 1; j < k; ++j) s -= (static_cast<double>(j) / k) * l.coeff(j) * u.coeff(k - j);
    l.coeff(k) = s / u.coeff(0);
  }
  return l;
}

/// Jet of the derivative u'. The top coefficient is unknowable and set to 0;
/// the result carries one derivative order less than the input.
inline Jet differentiate(const Jet& u) {
  Jet d;
  for (int k = 0; k < Jet::kOrder; ++k) d.coeff(k) = (k + 1) * u.coeff(k + 1);
  d.coeff(Jet::kOrder) = 0.0;
  return d;
}

}  // namespace serrin

#endif  // SERRIN_JET_HPP
