#include <doctest.h>

#include <cmath>
#include <random>

#include "serrin/analytic.hpp"
#include "serrin/fields.hpp"
#include "serrin/profile.hpp"
#include "serrin/quadrature.hpp"

using namespace serrin;

namespace {

ComponentPtr poly_component(double a0, double a1, double a2, double a3) {
  return std::make_shared<ClosedFormComponent>([=](const Jet& x) {
    return Jet::constant(a0) + a1 * x + a2 * x * x + a3 * x * x * x;
  });
}

Profile random_upper_profile(double b, std::mt19937& rng) {
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  auto mk = [&]() { return poly_component(coef(rng), coef(rng), coef(rng), coef(rng)); };
  return Profile(VortexParams(b, 0.0, 1.0), ProfileCase::Upper, ProfileKind::ClosedForm, mk(),
                 mk(), mk());
}

}  // namespace

TEST_CASE("jet arithmetic reproduces hand derivatives") {
  // f(x) = x^2 exp(x) / (1 + x)
  const Jet x = Jet::variable(0.37);
  const Jet f = x * x * exp(x) / (1.0 + x);
  auto ref = [](double t) { return t * t * std::exp(t) / (1.0 + t); };
  const double d = 1e-5;
  const double fd1 = (ref(0.37 + d) - ref(0.37 - d)) / (2.0 * d);
  const double fd2 = (ref(0.37 + d) - 2.0 * ref(0.37) + ref(0.37 - d)) / (d * d);
  CHECK(f.deriv(0) == doctest::Approx(ref(0.37)).epsilon(1e-14));
  CHECK(f.deriv(1) == doctest::Approx(fd1).epsilon(1e-9));
  CHECK(f.deriv(2) == doctest::Approx(fd2).epsilon(1e-5));
}

TEST_CASE("jet pow matches analytic derivatives of (1-x^2)^q") {
  const double q = 0.35;
  const Jet w = weight_jet(Jet::variable(0.6), q);
  auto ref = [&](double t) { return std::pow(1.0 - t * t, q); };
  const double d = 1e-5;
  CHECK(w.deriv(0) == doctest::Approx(ref(0.6)).epsilon(1e-14));
  CHECK(w.deriv(1) == doctest::Approx((ref(0.6 + d) - ref(0.6 - d)) / (2 * d)).epsilon(1e-9));
}

TEST_CASE("mesh invariants") {
  const Mesh m(1e-3);
  CHECK(m.n == 1000);
  CHECK(m.node(0) == 0.0);
  CHECK(m.node(m.n) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(Mesh(0.00030001), std::invalid_argument);
  CHECK_THROWS_AS(Mesh(-0.1), std::invalid_argument);
}

TEST_CASE("fd_weights reproduce classic stencils") {
  const std::vector<double> sym = {-1.0, 0.0, 1.0};
  const auto w1 = fd_weights(0.0, sym, 1);
  CHECK(w1[0] == doctest::Approx(-0.5));
  CHECK(w1[1] == doctest::Approx(0.0));
  CHECK(w1[2] == doctest::Approx(0.5));
  const auto w2 = fd_weights(0.0, sym, 2);
  CHECK(w2[0] == doctest::Approx(1.0));
  CHECK(w2[1] == doctest::Approx(-2.0));
  CHECK(w2[2] == doctest::Approx(1.0));
  const std::vector<double> five = {-2.0, -1.0, 0.0, 1.0, 2.0};
  const auto w3 = fd_weights(0.0, five, 3);
  CHECK(w3[0] == doctest::Approx(-0.5));
  CHECK(w3[1] == doctest::Approx(1.0));
  CHECK(w3[3] == doctest::Approx(-1.0));
  CHECK(w3[4] == doctest::Approx(0.5));
}

TEST_CASE("VortexParams validation") {
  CHECK_THROWS_AS(VortexParams(0.0, 0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(VortexParams(1.0, -1e-9, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(VortexParams(1.0, 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("case conversion: b = 1 is the identity") {
  auto sol = analytic::inviscid_b1(2.0, 1.0);
  const Profile lower = to_lowercase(sol.profile);
  for (double x : {0.1, 0.33, 0.8}) {
    CHECK(lower.meridional()(x) == doctest::Approx(sol.profile.meridional()(x)).epsilon(1e-15));
    CHECK(lower.radial()(x) == doctest::Approx(sol.profile.radial()(x)).epsilon(1e-15));
  }
}

TEST_CASE("case conversion: direct formula value") {
  // b = 0.5, F = 1 everywhere: f(0.6) = (1 - 0.36)^{0.25}
  auto one = std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet::constant(1.0); });
  Profile up(VortexParams(0.5, 0.0, 1.0), ProfileCase::Upper, ProfileKind::ClosedForm, one, one,
             one);
  const Profile lo = to_lowercase(up);
  CHECK(lo.meridional()(0.6) == doctest::Approx(std::pow(0.64, 0.25)).epsilon(1e-15));
}

TEST_CASE("case conversion round trip, closed form and sampled") {
  std::mt19937 rng(1234);
  for (double b : {0.2, 0.6, 1.0, 1.5}) {
    const Profile up = random_upper_profile(b, rng);
    const Profile lo = to_lowercase(up);
    const Profile back = to_uppercase(lo);
    for (int i = 1; i < 40; ++i) {
      const double x = i / 40.0;
      CHECK(std::abs(back.meridional()(x) - up.meridional()(x)) <= 1e-12);
      CHECK(std::abs(back.radial()(x) - up.radial()(x)) <= 1e-12);
      CHECK(std::abs(back.azimuthal()(x) - up.azimuthal()(x)) <= 1e-12);
    }

    // sampled path: interior grid
    const int n = 200;
    const double h = 1.0 / n;
    std::vector<double> vals(n - 1);
    for (int i = 1; i < n; ++i) vals[i - 1] = up.meridional()(i * h);
    auto samp = std::make_shared<SampledComponent>(h, h, vals);
    Profile sup(VortexParams(b, 0.0, 1.0), ProfileCase::Upper, ProfileKind::Sampled, samp, samp,
                samp);
    const Profile slo = to_lowercase(sup);
    const Profile sback = to_uppercase(slo);
    const auto& c0 = dynamic_cast<const SampledComponent&>(sup.meridional());
    const auto& c1 = dynamic_cast<const SampledComponent&>(sback.meridional());
    for (int i = 0; i < c0.size(); ++i) {
      CHECK(std::abs(c0.table(0)[i] - c1.table(0)[i]) <= 1e-12);
    }
  }
}

TEST_CASE("zero maps to zero under conversion") {
  auto zero = std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet(); });
  Profile up(VortexParams(0.7, 0.0, 1.0), ProfileCase::Upper, ProfileKind::ClosedForm, zero, zero,
             std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet::constant(1.0); }));
  const Profile lo = to_lowercase(up);
  CHECK(lo.meridional()(0.5) == 0.0);
  CHECK(lo.radial()(0.9) == 0.0);
}

TEST_CASE("continuity g from f: b = 1 closed form") {
  // f = sqrt(x(1-x)) gives g = (1-2x) sqrt(1+x) / (2 sqrt(x))
  auto f = std::make_shared<ClosedFormComponent>(
      [](const Jet& x) { return sqrt(x * (1.0 - x)); });
  auto g = continuity_g_from_f(f, 1.0);
  for (double x : {0.1, 0.25, 0.5, 0.77}) {
    const double expected = (1.0 - 2.0 * x) * std::sqrt(1.0 + x) / (2.0 * std::sqrt(x));
    CHECK((*g)(x) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("continuity g from f: stationary point and zero map") {
  auto zero = std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet(); });
  CHECK((*continuity_g_from_f(zero, 0.5))(0.4) == 0.0);

  auto f = std::make_shared<ClosedFormComponent>([](const Jet& x) { return x * (1.0 - x); });
  // f'(0.5) = 0
  CHECK((*continuity_g_from_f(f, 0.5))(0.5) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(continuity_g_from_f(f, 2.0), std::domain_error);
}

TEST_CASE("continuity G from F: b = 1 reduces to sqrt(1-x^2) F'") {
  auto F = poly_component(0.3, -0.8, 0.2, 0.4);
  auto G = continuity_G_from_F(F, 1.0);
  for (double x : {0.15, 0.5, 0.85}) {
    const double expected = std::sqrt(1.0 - x * x) * F->deriv(x, 1);
    CHECK((*G)(x) == doctest::Approx(expected).epsilon(1e-13));
  }
  // b = 1 family: G(0.5) = 0 since 1 - 2x vanishes
  auto Fb1 = std::make_shared<ClosedFormComponent>(
      [](const Jet& x) { return sqrt(x * (1.0 - x)); });
  CHECK((*continuity_G_from_F(Fb1, 1.0))(0.5) == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("flux integral: closed forms") {
  auto zero = std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet(); });
  CHECK(flux_integral(*zero) == doctest::Approx(0.0).epsilon(1e-12));

  // integral of x / sqrt(1-x^2) over (0,1) = 1
  auto lin = std::make_shared<ClosedFormComponent>([](const Jet& x) { return x; });
  CHECK(flux_integral(*lin) == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("flux integral vanishes for the b = 1 family") {
  auto sol = analytic::inviscid_b1(1.0, 1.0);
  const Profile lower = to_lowercase(sol.profile);
  CHECK(std::abs(flux_integral(lower.radial())) <= 1e-6);
  CHECK(std::abs(flux_integral(sol.profile)) <= 1e-6);
}

TEST_CASE("stream function") {
  auto sol = analytic::inviscid_b1(1.0, 1.0);
  const Profile lower = to_lowercase(sol.profile);
  // b = 1, f = sqrt(x(1-x)), R = 2, x = 0.5 -> 2 * 0.5 = 1
  CHECK(stream_function(2.0, 0.5, lower) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(stream_function(2.0, 0.5, sol.profile) == doctest::Approx(1.0).epsilon(1e-14));

  // zero profile
  auto zero = std::make_shared<ClosedFormComponent>([](const Jet&) { return Jet(); });
  Profile zp(VortexParams(0.7, 0.0, 1.0), ProfileCase::Lower, ProfileKind::ClosedForm, zero, zero,
             zero);
  CHECK(stream_function(3.0, 0.4, zp) == 0.0);

  // b = 2: Psi independent of R
  Profile p2(VortexParams(2.0, 0.0, 1.0), ProfileCase::Lower, ProfileKind::ClosedForm,
             poly_component(0.0, 1.0, -1.0, 0.0), zero, zero);
  CHECK(stream_function(1.0, 0.3, p2) == doctest::Approx(stream_function(7.0, 0.3, p2)));
}

TEST_CASE("x from cylindrical coordinates") {
  CHECK(x_from_cylindrical(1.0, 0.0) == 0.0);
  CHECK(x_from_cylindrical(0.0, 1.0) == 1.0);
  CHECK(x_from_cylindrical(1.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(x_from_cylindrical(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(x_from_cylindrical(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("sampled derivative tables converge at second order") {
  auto sol = analytic::inviscid_b1(1.0, 1.0);
  const Component& F = sol.profile.meridional();

  auto sup_error = [&](int n, int order) {
    const double h = 1.0 / n;
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = F(i * h);
    SampledComponent s(0.0, h, v);
    double err = 0.0;
    // compare on the window [0.2, 0.8] where the closed form is smooth
    for (int i = static_cast<int>(0.2 * n); i <= static_cast<int>(0.8 * n); ++i) {
      err = std::max(err, std::abs(s.table(order)[i] - F.deriv(i * h, order)));
    }
    return err;
  };

  for (int order = 1; order <= 4; ++order) {
    const double e1 = sup_error(250, order);
    const double e2 = sup_error(500, order);
    CHECK(e2 < e1);
    const double ratio = e1 / e2;
    CHECK(ratio > 2.8);  // O(h^2): ratio about 4
    CHECK(ratio < 6.5);
  }
}

TEST_CASE("grad Psi is orthogonal to the meridional velocity") {
  auto sol = analytic::inviscid_b1(4.0 * std::sqrt(2.0), 1.0);
  const Profile lower = to_lowercase(sol.profile);

  // 50x50 grid away from the axis and ground; 4th-order stencils for the
  // gradient of Psi in (r, z)
  const int ng = 50;
  double worst = 0.0;
  for (int i = 0; i < ng; ++i) {
    for (int j = 0; j < ng; ++j) {
      const double r = 0.1 + 0.85 * i / (ng - 1);
      const double z = 0.1 + 0.85 * j / (ng - 1);
      const double d = 1e-3;
      auto psi = [&](double rr, double zz) {
        const double R = std::hypot(rr, zz);
        return stream_function(R, zz / R, lower);
      };
      auto d4 = [&](auto f) {
        return (f(-2.0) - 8.0 * f(-1.0) + 8.0 * f(1.0) - f(2.0)) / (12.0 * d);
      };
      const double psi_r = d4([&](double k) { return psi(r + k * d, z); });
      const double psi_z = d4([&](double k) { return psi(r, z + k * d); });
      const auto v = fields::velocity_at(r, z, sol.profile);
      const double R = std::hypot(r, z);
      const double sa = r / R, ca = z / R;
      // meridional velocity in (r, z) components
      const double vr = v.v_R * sa + v.v_alpha * ca;
      const double vz = v.v_R * ca - v.v_alpha * sa;
      const double dot = std::abs(psi_r * vr + psi_z * vz);
      const double scale = std::hypot(psi_r, psi_z) * std::hypot(vr, vz);
      worst = std::max(worst, dot / scale);
    }
  }
  CHECK(worst <= 1e-6);
}
