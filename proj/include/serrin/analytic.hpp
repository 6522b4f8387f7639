#ifndef SERRIN_ANALYTIC_HPP
#define SERRIN_ANALYTIC_HPP

#include <optional>

#include "serrin/profile.hpp"

namespace serrin::analytic {

enum class SolutionVariant { Trivial, InviscidB1 };

/// A closed-form solution with exact component derivatives.
struct ClosedFormSolution {
  SolutionVariant variant;
  double c1;  // 0 for the trivial rotation
  Profile profile;  // upper case
};

/// Pure rotation F = G = 0, Omega = C_omega; a solution for every b > 0
/// with zero viscosity (and in the full space).
ClosedFormSolution trivial_solution(const VortexParams& params);

/// The inviscid b = 1 family:
///   Omega = C_omega,  F = C1 sqrt(x(1-x)),  G = C1 (1-2x) sqrt(1+x) / (2 sqrt(x)).
/// C1 = 0 reduces to the trivial solution.
ClosedFormSolution inviscid_b1(double c1, double c_omega);

/// Pressure of the b = 1 family (gauge constant T):
///   p = -(C_omega^2 - C1^2 (1-x)) / (2 r^2) + T,  r^2 = R^2 (1 - x^2).
/// Throws PoleError on the axis x = 1.
double pressure_b1(double R, double x, double c1, double c_omega, double T = 0.0);

/// The zero-pressure cone x* = 1 - (C_omega/C1)^2 of the b = 1 family.
struct ZeroIsobar {
  std::optional<double> x_star;  // empty when outside [0, 1)
  bool positive_slope_cone;      // true iff C1^2 > C_omega^2
};
ZeroIsobar zero_isobar_x(double c1, double c_omega);

/// Azimuthal profile of the viscous b != 1 analysis:
///   Omega(x) = C x (1-x^2)^((b-1)/2) 2F1((1-b)/2, b/2; 3/2; x^2),
/// the solution of (1-x^2)^2 Omega'' - 2(1-b) x (1-x^2) Omega' - (1-b^2) Omega = 0
/// with Omega(0) = 0, Omega'(0) = C.
double viscous_omega_hyper(double b, double C, double x);

/// Boundary behavior of the hypergeometric Omega as x -> 1; decided
/// analytically from the exponent sign and the Gamma-ratio closed form.
enum class OmegaLimit { DivergesToInfinity, TendsToZero, FiniteNonzero };
struct OmegaLimitClass {
  double b;
  OmegaLimit classification;
};
/// Throws std::domain_error for b = 1 (Serrin's case, not a witness).
OmegaLimitClass omega_limit_class(double b);

}  // namespace serrin::analytic

#endif  // SERRIN_ANALYTIC_HPP
