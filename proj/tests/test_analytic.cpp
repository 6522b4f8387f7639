#include <doctest.h>

#include <cmath>

#include "serrin/analytic.hpp"
#include "serrin/residuals.hpp"

using namespace serrin;
using namespace serrin::analytic;

TEST_CASE("trivial solution satisfies the reduced Euler equations for any b") {
  for (double b : {0.5, 0.7, 1.0, 1.5, 2.0}) {
    auto sol = trivial_solution(VortexParams(b, 0.0, 1.0));
    const Mesh mesh(1.0 / 64);
    auto [r1, r2] = residuals::euler_residuals(sol.profile, mesh);
    CHECK(r1.sup_norm <= 1e-12);
    CHECK(r2.sup_norm <= 1e-12);
  }
}

TEST_CASE("b = 1 family: pointwise values") {
  auto sol = inviscid_b1(4.0 * std::sqrt(2.0), 1.0);
  CHECK(sol.profile.meridional()(0.5) == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sol.profile.radial()(0.5) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(sol.profile.azimuthal()(0.5) == 1.0);
  // boundary values: F(0) = 0 and F -> 0 at the axis
  CHECK(sol.profile.meridional()(1e-12) == doctest::Approx(0.0).epsilon(1e-5));
  CHECK(sol.profile.meridional()(1.0 - 1e-12) == doctest::Approx(0.0).epsilon(1e-5));
}

TEST_CASE("b = 1 family: C1 = 0 reduces to the trivial solution") {
  auto sol = inviscid_b1(0.0, 2.5);
  CHECK(sol.variant == SolutionVariant::Trivial);
  CHECK(sol.profile.meridional()(0.3) == 0.0);
  CHECK(sol.profile.azimuthal()(0.3) == 2.5);
}

TEST_CASE("b = 1 family: radial outflow diverges near the ground") {
  auto sol = inviscid_b1(1.0, 1.0);
  CHECK(sol.profile.radial()(1e-8) > 1e3);
}

TEST_CASE("b = 1 family satisfies its two Euler equations exactly") {
  auto sol = inviscid_b1(4.0 * std::sqrt(2.0), 1.0);
  const Mesh mesh(0.01);  // 100 nodes
  auto [r1, r2] = residuals::euler_residuals(sol.profile, mesh);
  CHECK(r1.sup_norm <= 1e-10);
  CHECK(r2.sup_norm <= 1e-10);
}

TEST_CASE("pressure of the b = 1 family") {
  const double c1 = 4.0 * std::sqrt(2.0);
  // direct substitution example: (32*0.5 - 1) / (2*0.75) = 10
  CHECK(pressure_b1(1.0, 0.5, c1, 1.0) == doctest::Approx(10.0).epsilon(1e-14));
  // trivial cyclostrophic balance: C1 = 0, R = 1, x = 0 -> -C_omega^2/2
  CHECK(pressure_b1(1.0, 0.0, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-14));
  // vanishes on the zero isobar
  const double x_star = 1.0 - 1.0 / (c1 * c1);
  CHECK(pressure_b1(2.0, x_star, c1, 1.0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(pressure_b1(1.0, 1.0, c1, 1.0), PoleError);
}

TEST_CASE("pressure_b1 agrees with the general pressure formula") {
  const double c1 = 4.0 * std::sqrt(2.0);
  auto sol = inviscid_b1(c1, 1.0);
  const VortexParams params(1.0, 0.0, 1.0);
  for (double R : {0.5, 1.0, 2.0}) {
    for (int i = 1; i < 20; ++i) {
      const double x = i / 20.0;
      const double general = residuals::pressure_from_profile(R, x, sol.profile, params, 0.0);
      CHECK(general == doctest::Approx(pressure_b1(R, x, c1, 1.0)).epsilon(1e-8));
    }
  }
}

TEST_CASE("zero isobar position and slope classification") {
  // 45-degree funnel line: C1^2 = 2 + sqrt(2) puts x* at cos(pi/4)
  {
    auto iso = zero_isobar_x(std::sqrt(2.0 + std::sqrt(2.0)), 1.0);
    REQUIRE(iso.x_star.has_value());
    CHECK(*iso.x_star == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
    CHECK(iso.positive_slope_cone);
  }
  // C1 = 1: the isobar lies along the ground
  {
    auto iso = zero_isobar_x(1.0, 1.0);
    REQUIRE(iso.x_star.has_value());
    CHECK(*iso.x_star == doctest::Approx(0.0));
    CHECK_FALSE(iso.positive_slope_cone);
  }
  // C1^2 = 2 - sqrt(2): x* < 0, no isobar in range (funnel with ground width)
  {
    auto iso = zero_isobar_x(std::sqrt(2.0 - std::sqrt(2.0)), 1.0);
    CHECK_FALSE(iso.x_star.has_value());
    CHECK_FALSE(iso.positive_slope_cone);
  }
  CHECK_THROWS_AS(zero_isobar_x(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("hypergeometric Omega solves its ODE") {
  // residual of (1-x^2)^2 O'' - 2(1-b) x (1-x^2) O' - (1-b^2) O via central
  // differences of the closed form
  const double b = 0.5, C = 1.0;
  for (double x : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
    const double d = 1e-4;
    const double om = viscous_omega_hyper(b, C, x);
    const double op = viscous_omega_hyper(b, C, x + d);
    const double omn = viscous_omega_hyper(b, C, x - d);
    const double d1 = (op - omn) / (2.0 * d);
    const double d2 = (op - 2.0 * om + omn) / (d * d);
    const double w = 1.0 - x * x;
    const double res = w * w * d2 - 2.0 * (1.0 - b) * x * w * d1 - (1.0 - b * b) * om;
    CHECK(std::abs(res) <= 1e-6);
  }
}

TEST_CASE("hypergeometric Omega: initial slope and value") {
  CHECK(viscous_omega_hyper(0.5, 1.0, 0.0) == 0.0);
  const double d = 1e-7;
  CHECK((viscous_omega_hyper(0.5, 2.0, d) - 0.0) / d == doctest::Approx(2.0).epsilon(1e-5));
}

TEST_CASE("hypergeometric Omega boundary behavior") {
  // 0 < b < 1: diverges toward the axis like (1-x^2)^((b-1)/2); b > 1:
  // vanishes at the same slow rate
  CHECK(viscous_omega_hyper(0.5, 1.0, 1.0 - 1e-4) > 4.0 * viscous_omega_hyper(0.5, 1.0, 0.9));
  CHECK(viscous_omega_hyper(1.5, 1.0, 1.0 - 1e-4) < 0.5 * viscous_omega_hyper(1.5, 1.0, 0.9));
  // the divergence/decay follows the weight exponent
  const double ratio05 = viscous_omega_hyper(0.5, 1.0, 1.0 - 1e-4) /
                         viscous_omega_hyper(0.5, 1.0, 1.0 - 1e-2);
  CHECK(ratio05 == doctest::Approx(std::pow(1e-2, -0.25)).epsilon(0.05));
}

TEST_CASE("hypergeometric Omega is continuous in b at b = 1") {
  // the b-derivative of the closed form is about 0.4 at mid-interval, so the
  // deviation scales linearly with |b - 1|
  for (double x : {0.25, 0.5, 0.75}) {
    CHECK(std::abs(viscous_omega_hyper(1.0 + 1e-3, 1.0, x) - x) <= 1e-3);
    CHECK(std::abs(viscous_omega_hyper(1.0 - 1e-3, 1.0, x) - x) <= 1e-3);
    const double dev3 = std::abs(viscous_omega_hyper(1.0 + 1e-3, 1.0, x) - x);
    const double dev4 = std::abs(viscous_omega_hyper(1.0 + 1e-4, 1.0, x) - x);
    CHECK(dev4 <= 0.15 * dev3);  // first-order vanishing in b - 1
    CHECK(viscous_omega_hyper(1.0, 1.0, x) == x);
  }
}

TEST_CASE("omega limit classification") {
  CHECK(omega_limit_class(0.3).classification == OmegaLimit::DivergesToInfinity);
  CHECK(omega_limit_class(0.7).classification == OmegaLimit::DivergesToInfinity);
  CHECK(omega_limit_class(1.3).classification == OmegaLimit::TendsToZero);
  CHECK(omega_limit_class(1.7).classification == OmegaLimit::TendsToZero);
  CHECK(omega_limit_class(3.0).classification == OmegaLimit::TendsToZero);
  CHECK_THROWS_AS(omega_limit_class(1.0), std::domain_error);
}

TEST_CASE("viscous b = 2 witness: residual is exactly 3 C_omega") {
  for (double c_omega : {1.0, -2.0, 0.5}) {
    const VortexParams params(2.0, 0.01, c_omega);
    auto sol = trivial_solution(params);
    const Mesh mesh(1.0 / 64);
    auto reports = residuals::ns_residuals(sol.profile, params, mesh);
    REQUIRE(reports.size() == 3);
    // second report is the Omega equation; with Omega = C_omega the
    // derivative terms vanish identically and 3 C_omega remains
    for (double r : reports[1].residuals) {
      CHECK(r == 3.0 * c_omega);
    }
    // the other two are satisfied by G = 0, Omega constant
    CHECK(reports[0].sup_norm == 0.0);
    CHECK(reports[2].sup_norm == 0.0);
  }
}
