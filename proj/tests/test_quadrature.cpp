#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "tunneling/quadrature.hpp"

using namespace tunneling;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("Gauss-Legendre nodes and weights") {
  const auto r = gauss_legendre(5);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK_THAT(wsum, WithinRel(2.0, 1e-15));
  CHECK_THAT(r.nodes[2], WithinAbs(0.0, 1e-16));
  CHECK_THAT(r.nodes[4], WithinRel(std::sqrt(5.0 + 2.0 * std::sqrt(10.0 / 7.0)) / 3.0, 1e-15));
  CHECK_THROWS_AS(gauss_legendre(0), ContractViolation);
}

TEST_CASE("n-point rule integrates polynomials of degree 2n - 1 exactly") {
  QuadratureConfig cfg;
  cfg.n_points = 16;
  for (int p = 0; p <= 31; ++p) {
    const double got = integrate([p](double x) { return std::pow(x, p); }, 0.0, 1.0, cfg);
    CHECK_THAT(got, WithinRel(1.0 / (p + 1), 1e-13));
  }
}

TEST_CASE("oscillatory and exponential integrands") {
  QuadratureConfig cfg;
  CHECK_THAT(integrate([](double x) { return std::cosh(12.0 * x); }, 0.0, 1.0, cfg),
             WithinRel(std::sinh(12.0) / 12.0, 1e-14));
  const auto z = integrate([](double x) { return std::exp(std::complex<double>(0.0, 9.0 * x)); }, 0.0, 1.0, cfg);
  const auto want = (std::exp(std::complex<double>(0.0, 9.0)) - 1.0) / std::complex<double>(0.0, 9.0);
  CHECK(std::abs(z - want) < 1e-14);
}

TEST_CASE("Simpson converges at fourth order") {
  auto err = [](int n) {
    QuadratureConfig cfg{n, QuadratureRule::Simpson};
    return std::abs(integrate([](double x) { return std::exp(x); }, 0.0, 1.0, cfg) - (std::numbers::e - 1.0));
  };
  const double ratio = err(32) / err(64);
  CHECK_THAT(ratio, WithinRel(16.0, 0.02));
  // Odd counts round up to an even panel number.
  CHECK_THAT(err(33), WithinRel(err(34), 1e-12));
}

TEST_CASE("configs below 16 points are rejected") {
  QuadratureConfig cfg{8, QuadratureRule::GaussLegendre};
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, cfg), ContractViolation);
}
