#include <catch2/catch_amalgamated.hpp>

#include "tunneling/algebra.hpp"

using namespace tunneling;

TEST_CASE("standard representation satisfies the Clifford and gamma5 identities") {
  const auto report = check_representation(make_standard_representation());
  for (const auto& r : report.residuals) {
    INFO(r.name);
    CHECK(r.value < 1e-12);
  }
  CHECK(report.passes());
}

TEST_CASE("alternative representation: eta and Hamiltonian-form algebra") {
  const auto report = check_representation(make_alternative_representation());
  for (const auto& r : report.residuals) {
    INFO(r.name);
    CHECK(r.value < 1e-12);
  }
}

TEST_CASE("eta is nilpotent with unit anticommutator, zero trace and determinant") {
  const Matrix4 eta = build_eta();
  CHECK(max_abs(eta * eta) < 1e-15);
  CHECK(max_abs_diff(anticommutator(eta, eta.adjoint()), Matrix4(2.0 * identity4())) < 1e-15);
  CHECK(std::abs(eta.trace()) < 1e-15);
  CHECK(std::abs(eta.determinant()) < 1e-15);
}

TEST_CASE("gamma5 from the Levi-Civita contraction equals i g0 g1 g2 g3") {
  CHECK(max_abs_diff(build_gamma5_levi_civita(), build_gamma5()) < 1e-14);
  CHECK(levi_civita_lower(0, 1, 2, 3) == -1);
  CHECK(levi_civita_lower(1, 0, 2, 3) == 1);
  CHECK(levi_civita_lower(0, 0, 2, 3) == 0);
}

TEST_CASE("alternative beta is the standard gamma0; its x3 matrix is alpha3 up to sign") {
  const auto alt = make_alternative_representation();
  CHECK(max_abs_diff(alt.gamma0, build_gamma(0)) < 1e-15);
  const Matrix4 a3 = build_alpha3();
  const double plus = max_abs_diff(alt.gamma3, a3);
  const double minus = max_abs_diff(alt.gamma3, Matrix4(-a3));
  CHECK(std::min(plus, minus) < 1e-15);
  // i gamma5 of the alternative set coincides with the standard gamma3.
  CHECK(max_abs_diff(alt.gamma5_times_i, build_gamma(3)) < 1e-15);
}

TEST_CASE("the alternative x3 matrix squares to +I, so it cannot be a Minkowski gamma3") {
  const auto alt = make_alternative_representation();
  const Matrix4 sq = alt.gamma3 * alt.gamma3;
  CHECK(max_abs_diff(sq, identity4()) < 1e-15);
  CHECK(max_abs_diff(sq, Matrix4(metric(3) * identity4())) > 1.0);
}

TEST_CASE("gamma3_signed flips the sign") {
  const auto rep = make_standard_representation();
  CHECK(max_abs_diff(rep.gamma3_signed(-1), Matrix4(-rep.gamma3)) == 0.0);
  CHECK(max_abs_diff(rep.gamma3_signed(1), rep.gamma3) == 0.0);
}

TEST_CASE("pauli rejects bad indices") {
  CHECK_THROWS_AS(pauli(0), ContractViolation);
  CHECK_THROWS_AS(pauli(4), ContractViolation);
}

TEST_CASE("residuals stay at roundoff level across repeated construction") {
  const auto a = check_representation(make_alternative_representation());
  const auto b = check_representation(make_alternative_representation());
  REQUIRE(a.residuals.size() == b.residuals.size());
  for (std::size_t n = 0; n < a.residuals.size(); ++n) CHECK(a.residuals[n].value == b.residuals[n].value);
}

TEST_CASE("eta differs from its transpose but is not antisymmetric either") {
  const Matrix4 eta = build_eta();
  CHECK(max_abs_diff(Matrix4(eta.transpose()), eta) > 0.5);
  CHECK(max_abs_diff(Matrix4(eta.transpose()), Matrix4(-eta)) > 0.5);
}
