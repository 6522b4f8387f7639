#include "serrin/analytic.hpp"

#include <cmath>

#include "serrin/specfun.hpp"

namespace serrin::analytic {

namespace {

ComponentPtr constant_component(double v) {
  return std::make_shared<ClosedFormComponent>([v](const Jet&) { return Jet::constant(v); });
}

}  // namespace

ClosedFormSolution trivial_solution(const VortexParams& params) {
  Profile profile(params, ProfileCase::Upper, ProfileKind::ClosedForm, constant_component(0.0),
                  constant_component(0.0), constant_component(params.c_omega));
  return {SolutionVariant::Trivial, 0.0, std::move(profile)};
}

ClosedFormSolution inviscid_b1(double c1, double c_omega) {
  VortexParams params(1.0, 0.0, c_omega);
  if (c1 == 0.0) {
    ClosedFormSolution t = trivial_solution(params);
    return {SolutionVariant::Trivial, 0.0, std::move(t.profile)};
  }
  auto F = std::make_shared<ClosedFormComponent>(
      [c1](const Jet& x) { return c1 * sqrt(x * (1.0 - x)); });
  auto G = std::make_shared<ClosedFormComponent>([c1](const Jet& x) {
    return c1 * (1.0 - 2.0 * x) * sqrt(1.0 + x) / (2.0 * sqrt(x));
  });
  Profile profile(params, ProfileCase::Upper, ProfileKind::ClosedForm, std::move(F), std::move(G),
                  constant_component(c_omega));
  return {SolutionVariant::InviscidB1, c1, std::move(profile)};
}

double pressure_b1(double R, double x, double c1, double c_omega, double T) {
  if (!(R > 0.0)) throw std::invalid_argument("pressure_b1: R must be positive");
  if (x >= 1.0) throw PoleError("pressure_b1: singular on the vortex axis x = 1");
  const double r2 = R * R * (1.0 - x) * (1.0 + x);
  return -(c_omega * c_omega - c1 * c1 * (1.0 - x)) / (2.0 * r2) + T;
}

ZeroIsobar zero_isobar_x(double c1, double c_omega) {
  if (c1 == 0.0) throw std::invalid_argument("zero_isobar_x: undefined for C1 = 0");
  const double ratio = c_omega / c1;
  const double x_star = 1.0 - ratio * ratio;
  ZeroIsobar out{std::nullopt, c1 * c1 > c_omega * c_omega};
  if (x_star >= 0.0 && x_star < 1.0) out.x_star = x_star;
  return out;
}

double viscous_omega_hyper(double b, double C, double x) {
  if (b == 1.0) return C * x;  // degenerate limit: 2F1(0, ...) = 1 and the weight is 1
  if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("viscous_omega_hyper: requires 0 <= x < 1");
  const specfun::HyperParams hp((1.0 - b) / 2.0, b / 2.0, 1.5);
  const double w = std::pow((1.0 - x) * (1.0 + x), (b - 1.0) / 2.0);
  return C * x * w * specfun::gauss_2f1(hp, x * x);
}

OmegaLimitClass omega_limit_class(double b) {
  if (!(b > 0.0)) throw std::domain_error("omega_limit_class: requires b > 0");
  if (b == 1.0) {
    throw std::domain_error("omega_limit_class: b = 1 is Serrin's case, not a nonexistence witness");
  }
  // Omega ~ (1-x^2)^((b-1)/2) * 2F1(...; 1) near the axis. For 0 < b < 1 the
  // weight diverges and the Gamma-ratio limit is finite nonzero; for b > 1
  // the weight vanishes (the Gamma factor is 0 for b = 3, 5, ..., vanishing
  // even faster).
  return {b, b < 1.0 ? OmegaLimit::DivergesToInfinity : OmegaLimit::TendsToZero};
}

}  // namespace serrin::analytic
