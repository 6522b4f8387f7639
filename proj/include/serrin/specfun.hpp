#ifndef SERRIN_SPECFUN_HPP
#define SERRIN_SPECFUN_HPP

#include <cstdint>

namespace serrin::specfun {

/// Parameters of the Gauss hypergeometric series 2F1(a, b; c; z).
struct HyperParams {
  double a;
  double b;
  double c;

  /// Throws std::invalid_argument if c is zero or a negative integer
  /// (the series is undefined there).
  HyperParams(double a_, double b_, double c_);
};

/// Rising factorial (x)_n: 1 for n = 0, else x(x+1)...(x+n-1).
/// Overflow is reported through an infinite return value.
double pochhammer(double x, int n);

/// log Gamma(x) for x > 0 via a Lanczos approximation implemented locally.
/// Throws std::domain_error for x <= 0.
double ln_gamma(double x);

/// Sign-aware log Gamma, valid away from the poles 0, -1, -2, ...
struct SignedLogGamma {
  double log_abs;
  double sign;
};
SignedLogGamma lgamma_signed(double x);

/// Series evaluation of 2F1(a, b; c; z) on 0 <= z < 1. Terms are summed
/// until the next term falls below 1e-16 of the partial sum; if the term
/// count exceeds max_terms, std::runtime_error is thrown. Deterministic.
double gauss_2f1(const HyperParams& p, double z, long max_terms = 1'000'000);

/// Closed form of 2F1((1-b)/2, b/2; 3/2; 1) for the model exponent b:
///   sqrt(pi) / (2 Gamma((3-b)/2) Gamma((2+b)/2)).
/// Returns exactly 0 when a Gamma pole applies (b = 3, 5, 7, ...).
double gauss_2f1_at_one(double b_model);

}  // namespace serrin::specfun

#endif  // SERRIN_SPECFUN_HPP
