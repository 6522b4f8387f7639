#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "serrin/specfun.hpp"

using namespace serrin::specfun;

namespace {

// Direct partial summation, independent of the running-term recurrence in
// the implementation: every term is formed by its own product loop.
double brute_force_2f1(double a, double b, double c, double z, int terms) {
  double sum = 0.0;
  for (int n = 0; n < terms; ++n) {
    double term = 1.0;
    for (int k = 0; k < n; ++k) {
      term *= (a + k) * (b + k) * z / ((c + k) * (k + 1.0));
    }
    sum += term;
  }
  return sum;
}

}  // namespace

TEST_CASE("pochhammer basics") {
  CHECK(pochhammer(3.7, 0) == 1.0);
  CHECK(pochhammer(-12.0, 0) == 1.0);
  CHECK(pochhammer(1.0, 5) == 120.0);           // (1)_n = n!
  CHECK(pochhammer(0.5, 3) == doctest::Approx(1.875).epsilon(1e-15));  // 0.5 * 1.5 * 2.5
}

TEST_CASE("pochhammer recurrence (x)_{n+1} = (x)_n (x+n)") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> xs(-4.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    const double x = xs(rng);
    for (int n = 0; n < 8; ++n) {
      CHECK(pochhammer(x, n + 1) ==
            doctest::Approx(pochhammer(x, n) * (x + n)).epsilon(1e-13));
    }
  }
}

TEST_CASE("ln_gamma known values") {
  CHECK(ln_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ln_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(ln_gamma(0.5) == doctest::Approx(std::log(std::sqrt(M_PI))).epsilon(1e-14));
  CHECK(ln_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("ln_gamma against the library implementation") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> xs(1e-3, 40.0);
  for (int trial = 0; trial < 200; ++trial) {
    const double x = xs(rng);
    const double ref = std::lgamma(x);
    CHECK(std::abs(ln_gamma(x) - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
  CHECK_THROWS_AS(ln_gamma(0.0), std::domain_error);
  CHECK_THROWS_AS(ln_gamma(-1.3), std::domain_error);
}

TEST_CASE("gauss_2f1 trivial cases") {
  CHECK(gauss_2f1(HyperParams(0.8, -1.2, 1.5), 0.0) == 1.0);
  // a = 0 kills every term past n = 0
  CHECK(gauss_2f1(HyperParams(0.0, 2.3, 1.5), 0.7) == 1.0);
}

TEST_CASE("gauss_2f1 against brute-force partial sums") {
  const double val = gauss_2f1(HyperParams(0.25, 0.25, 1.5), 0.5);
  CHECK(val == doctest::Approx(brute_force_2f1(0.25, 0.25, 1.5, 0.5, 200)).epsilon(1e-14));
}

TEST_CASE("gauss_2f1 symmetry in (a, b)") {
  std::mt19937 rng(97);
  std::uniform_real_distribution<double> par(-2.0, 2.0);
  std::uniform_real_distribution<double> zs(0.0, 0.9);
  for (int trial = 0; trial < 100; ++trial) {
    const double a = par(rng), b = par(rng), z = zs(rng);
    const double c = 1.5;
    const double v1 = gauss_2f1(HyperParams(a, b, c), z);
    const double v2 = gauss_2f1(HyperParams(b, a, c), z);
    CHECK(std::abs(v1 - v2) <= 1e-14 * std::max(1.0, std::abs(v1)));
  }
}

TEST_CASE("gauss_2f1 rejects bad input") {
  CHECK_THROWS_AS(HyperParams(0.1, 0.1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HyperParams(0.1, 0.1, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_2f1(HyperParams(0.1, 0.1, 1.5), 1.0), std::domain_error);
  CHECK_THROWS_AS(gauss_2f1(HyperParams(0.1, 0.1, 1.5), -0.1), std::domain_error);
  // cap reachable: very slow convergence near z = 1 with a tiny cap
  CHECK_THROWS_AS(gauss_2f1(HyperParams(0.25, 0.5, 1.5), 1.0 - 1e-6, 100), std::runtime_error);
}

TEST_CASE("gauss_2f1_at_one closed form") {
  // b = 1: Gamma(1) Gamma(3/2) ratio collapses to 1
  CHECK(gauss_2f1_at_one(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // zero exactly at the Gamma poles b = 3, 5, 7
  CHECK(gauss_2f1_at_one(3.0) == 0.0);
  CHECK(gauss_2f1_at_one(5.0) == 0.0);
  CHECK(gauss_2f1_at_one(7.0) == 0.0);
}

TEST_CASE("gauss_2f1_at_one matches the series limit") {
  // c - a - b = 1 > 0, so the series converges at z -> 1, slowly; compare
  // with a Richardson step in (1 - z)
  for (double b : {0.3, 0.6, 1.5}) {
    const HyperParams p((1.0 - b) / 2.0, b / 2.0, 1.5);
    const double f1 = gauss_2f1(p, 1.0 - 1e-6, 50'000'000);
    const double limit = gauss_2f1_at_one(b);
    CHECK(std::abs(f1 - limit) <= 1e-4 * std::max(1.0, std::abs(limit)));
    const double f2 = gauss_2f1(p, 1.0 - 2e-6, 50'000'000);
    const double extrapolated = 2.0 * f1 - f2;
    CHECK(std::abs(extrapolated - limit) <= 2e-5 * std::max(1.0, std::abs(limit)));
  }
}
