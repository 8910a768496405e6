#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "reference/reference_values.hpp"
#include "tunneling/barrier.hpp"

using namespace tunneling;
using Catch::Matchers::WithinRel;

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TEST_CASE("relativistic kinematics at the figure parameters, eps = 0.5") {
  const auto k = kinematics({kTwoPi, 0.98, 0.5, Regime::Relativistic});
  CHECK_THAT(k.k, WithinRel(reference::kRelHalfKa, 1e-14));
  CHECK_THAT(k.q, WithinRel(reference::kRelHalfQa, 1e-14));
  CHECK_THAT(k.Xi, WithinRel(reference::kRelHalfXi, 1e-14));
  CHECK_THAT(k.Eprime, WithinRel(reference::kRelHalfEprime, 1e-14));
  CHECK_THAT(k.Gamma, WithinRel(k.k / kTwoPi / 0.5, 1e-14));
  CHECK_THAT(k.Xi, WithinRel(k.Gamma / k.GammaPrime, 1e-14));
}

TEST_CASE("relativistic window is (1 - mu, mu) clipped to (0, 1)") {
  auto [lo, hi] = admissible_window(Regime::Relativistic, 0.98);
  CHECK_THAT(lo, WithinRel(0.02, 1e-14));
  CHECK(hi == 0.98);
  std::tie(lo, hi) = admissible_window(Regime::Relativistic, 2.0);
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
  std::tie(lo, hi) = admissible_window(Regime::NonRelativistic, 0.1);
  CHECK(lo == 0.0);
  CHECK(hi == 1.0);
}

TEST_CASE("outside the window the square roots are rejected") {
  CHECK_THROWS_AS(kinematics({kTwoPi, 0.98, 0.99, Regime::Relativistic}), NonPositiveRootArgument);
  CHECK_THROWS_AS(kinematics({kTwoPi, 0.98, 0.01, Regime::Relativistic}), NonPositiveRootArgument);
  try {
    kinematics({kTwoPi, 0.98, 0.99, Regime::Relativistic});
  } catch (const NonPositiveRootArgument& e) {
    CHECK(e.value() < 0.0);
    CHECK(!e.name().empty());
  }
}

TEST_CASE("contract violations on the spec") {
  CHECK_THROWS_AS(kinematics({0.0, 0.98, 0.5, Regime::Relativistic}), ContractViolation);
  CHECK_THROWS_AS(kinematics({1.0, -1.0, 0.5, Regime::Relativistic}), ContractViolation);
  CHECK_THROWS_AS(kinematics({1.0, 0.98, 1.0, Regime::NonRelativistic}), ContractViolation);
  CHECK_THROWS_AS(kinematics({1.0, 0.98, 0.0, Regime::SuperRelativistic}), ContractViolation);
}

TEST_CASE("non-relativistic kinematics: Xi = k/q, Gamma = hbar k / mc") {
  const double m = 0.98;
  const auto k = kinematics({kTwoPi, m, 0.3, Regime::NonRelativistic});
  CHECK_THAT(k.k, WithinRel(std::sqrt(2 * m * 0.3) * kTwoPi, 1e-14));
  CHECK_THAT(k.q, WithinRel(std::sqrt(2 * m * 0.7) * kTwoPi, 1e-14));
  CHECK_THAT(k.Xi, WithinRel(std::sqrt(0.3 / 0.7), 1e-14));
  CHECK_THAT(k.Gamma, WithinRel(std::sqrt(2 * m * 0.3) / m, 1e-14));
  CHECK(k.Eprime == m);
}

TEST_CASE("super-relativistic Xi = sqrt((1 - eps)/eps) vanishes as eps -> 1") {
  for (double eps : {0.1, 0.5, 0.9, 0.999}) {
    const auto k = kinematics({kTwoPi, 0.98, eps, Regime::SuperRelativistic});
    CHECK_THAT(k.Xi, WithinRel(std::sqrt((1 - eps) / eps), 1e-13));
    CHECK(k.mass == 1.0 / 0.98);
  }
  const auto near_top = kinematics({kTwoPi, 0.98, 1.0 - 1e-9, Regime::SuperRelativistic});
  CHECK(near_top.Xi < 1e-4);
}

TEST_CASE("regime names round trip") {
  for (Regime r : {Regime::Relativistic, Regime::NonRelativistic, Regime::SuperRelativistic})
    CHECK(parse_regime(to_string(r)) == r);
  CHECK_FALSE(parse_regime("classical").has_value());
}

TEST_CASE("wavenumbers scale linearly with u while ratios do not") {
  const BarrierSpec s{1.0, 1.3, 0.4, Regime::Relativistic};
  const auto a = kinematics(s);
  const auto b = kinematics(s.with_u(3.0));
  CHECK_THAT(b.k, WithinRel(3.0 * a.k, 1e-15));
  CHECK_THAT(b.q, WithinRel(3.0 * a.q, 1e-15));
  CHECK(a.Xi == b.Xi);
  CHECK_THAT(a.wavenumber(), WithinRel(b.wavenumber(), 1e-15));
}
