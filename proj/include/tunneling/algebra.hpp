#pragma once

// 4x4 Dirac-matrix kernel: the standard gamma matrices and the alternative
// representation built from the nilpotent matrix eta.

#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tunneling/errors.hpp"

namespace tunneling {

using complex = std::complex<double>;
using Matrix2 = Eigen::Matrix2cd;
using Matrix4 = Eigen::Matrix4cd;
using Spinor = Eigen::Vector4cd;

/// Entrywise tolerance for matrix identities. Entries are O(1).
inline constexpr double kMatrixTolerance = 1e-12;

#ifdef TUNNELING_INJECT_FAULT
// Deliberately wrong normalization, used only to prove that `verify` fails.
inline constexpr double kInvSqrt2 = 0.7071;
#else
inline constexpr double kInvSqrt2 = 0.70710678118654752440;
#endif

inline double max_abs(const Matrix4& m) { return m.cwiseAbs().maxCoeff(); }

inline double max_abs_diff(const Matrix4& a, const Matrix4& b) { return max_abs(a - b); }

inline bool approx_equal(const Matrix4& a, const Matrix4& b, double tol = kMatrixTolerance) {
  return max_abs_diff(a, b) <= tol;
}

inline Matrix4 anticommutator(const Matrix4& a, const Matrix4& b) { return a * b + b * a; }

inline Matrix4 identity4() { return Matrix4::Identity(); }

inline Matrix2 pauli(int j) {
  const complex i{0.0, 1.0};
  Matrix2 s;
  switch (j) {
    case 1: s << 0.0, 1.0, 1.0, 0.0; break;
    case 2: s << 0.0, -i, i, 0.0; break;
    case 3: s << 1.0, 0.0, 0.0, -1.0; break;
    default: throw ContractViolation("Pauli index must be 1, 2 or 3");
  }
  return s;
}

inline Matrix4 block(const Matrix2& tl, const Matrix2& tr, const Matrix2& bl, const Matrix2& br) {
  Matrix4 m;
  m.topLeftCorner<2, 2>() = tl;
  m.topRightCorner<2, 2>() = tr;
  m.bottomLeftCorner<2, 2>() = bl;
  m.bottomRightCorner<2, 2>() = br;
  return m;
}

/// Diagonal of the Minkowski metric, signature (+,-,-,-).
inline double metric(int mu) {
  if (mu < 0 || mu > 3) throw ContractViolation("Lorentz index must be in 0..3");
  return mu == 0 ? 1.0 : -1.0;
}

/// Standard-representation gamma^mu.
inline Matrix4 build_gamma(int mu) {
  const Matrix2 I = Matrix2::Identity();
  const Matrix2 O = Matrix2::Zero();
  if (mu == 0) return block(I, O, O, -I);
  if (mu >= 1 && mu <= 3) {
    const Matrix2 s = pauli(mu);
    return block(O, s, -s, O);
  }
  throw ContractViolation("gamma index must be in 0..3, got " + std::to_string(mu));
}

/// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3.
inline Matrix4 build_gamma5() {
  const complex i{0.0, 1.0};
  return i * build_gamma(0) * build_gamma(1) * build_gamma(2) * build_gamma(3);
}

/// Sign of the permutation (a,b,c,d) of (0,1,2,3); zero if any index repeats.
inline int permutation_sign(int a, int b, int c, int d) {
  std::array<int, 4> p{a, b, c, d};
  for (int x : p) {
    if (x < 0 || x > 3) throw ContractViolation("Levi-Civita index must be in 0..3");
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (p[i] == p[j]) return 0;
  int sign = 1;
  for (int i = 0; i < 4; ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

/// Fully covariant Levi-Civita symbol. The permutation sign is taken as the
/// contravariant epsilon^{0123} = +1; lowering four indices with the metric
/// (det g = -1) flips it, so epsilon_{0123} = -1.
inline int levi_civita_lower(int a, int b, int c, int d) {
  return static_cast<int>(metric(a) * metric(b) * metric(c) * metric(d)) *
         permutation_sign(a, b, c, d);
}

/// gamma^5 from the totally antisymmetric contraction
/// -(i/4!) epsilon_{mu nu kappa lambda} gamma^mu gamma^nu gamma^kappa gamma^lambda.
inline Matrix4 build_gamma5_levi_civita() {
  const complex i{0.0, 1.0};
  std::array<Matrix4, 4> g{build_gamma(0), build_gamma(1), build_gamma(2), build_gamma(3)};
  Matrix4 sum = Matrix4::Zero();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          const int eps = levi_civita_lower(a, b, c, d);
          if (eps != 0) sum += static_cast<double>(eps) * (g[a] * g[b] * g[c] * g[d]);
        }
  return -(i / 24.0) * sum;
}

/// Standard alpha_3 = gamma^0 gamma^3.
inline Matrix4 build_alpha3() { return build_gamma(0) * build_gamma(3); }

/// eta = (1/sqrt 2) [[I, sigma3], [-sigma3, -I]]. Nilpotent, {eta, eta^dagger} = 2 I.
inline Matrix4 build_eta() {
  const Matrix2 I = Matrix2::Identity();
  const Matrix2 s3 = pauli(3);
  return kInvSqrt2 * block(I, s3, -s3, -I);
}

enum class RepresentationTag { Standard, Alternative };

/// The three matrices the one-dimensional problem needs: beta (gamma0), the
/// x3 matrix, and i*gamma5.
struct Representation {
  RepresentationTag tag;
  Matrix4 gamma0;
  Matrix4 gamma3;
  Matrix4 gamma5_times_i;

  /// The x3 matrix with an explicit overall sign; both signs appear in the
  /// one-dimensional equation.
  Matrix4 gamma3_signed(int sign) const { return sign >= 0 ? gamma3 : Matrix4(-gamma3); }
};

inline Representation make_standard_representation() {
  const complex i{0.0, 1.0};
  return {RepresentationTag::Standard, build_gamma(0), build_gamma(3), i * build_gamma5()};
}

inline Representation make_alternative_representation() {
  const Matrix4 eta = build_eta();
  const Matrix4 eta_dag = eta.adjoint();
  return {RepresentationTag::Alternative, kInvSqrt2 * (eta + eta_dag),
          eta_dag * eta - identity4(), kInvSqrt2 * (eta - eta_dag)};
}

/// beta and alpha_3 of the alternative representation, used by the
/// scattering bilinears.
inline const Matrix4& alternative_beta() {
  static const Matrix4 beta = make_alternative_representation().gamma0;
  return beta;
}

inline const Matrix4& alternative_alpha3() {
  static const Matrix4 alpha3 = make_alternative_representation().gamma3;
  return alpha3;
}

struct Residual {
  std::string name;
  double value;
};

struct AlgebraReport {
  RepresentationTag tag;
  std::vector<Residual> residuals;

  double max_residual() const {
    double m = 0.0;
    for (const auto& r : residuals) m = std::max(m, r.value);
    return m;
  }
  bool passes(double tol = kMatrixTolerance) const { return max_residual() < tol; }
};

namespace detail {

inline void add_standard_checks(std::vector<Residual>& out) {
  std::array<Matrix4, 4> g{build_gamma(0), build_gamma(1), build_gamma(2), build_gamma(3)};
  double clifford = 0.0;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const double target = mu == nu ? 2.0 * metric(mu) : 0.0;
      clifford = std::max(clifford, max_abs(anticommutator(g[mu], g[nu]) -
                                            Matrix4(target * identity4())));
    }
  out.push_back({"clifford_all_pairs", clifford});

  const Matrix4 g5 = build_gamma5();
  out.push_back({"gamma5_squared", max_abs_diff(g5 * g5, identity4())});
  double anti = 0.0;
  for (int mu = 0; mu < 4; ++mu) anti = std::max(anti, max_abs(anticommutator(g5, g[mu])));
  out.push_back({"gamma5_anticommutation", anti});
  out.push_back({"gamma5_levi_civita_form", max_abs_diff(g5, build_gamma5_levi_civita())});
}

}  // namespace detail

/// Residuals of the algebraic identities the representation must satisfy.
///
/// Standard: Clifford relations over all 16 index pairs, gamma5 squared and
/// anticommutation, and agreement of the two gamma5 constructions.
///
/// Alternative: eta nilpotency, {eta, eta^dagger} = 2I, zero trace and
/// determinant; beta and alpha_3 obey the Hamiltonian-form algebra
/// (beta^2 = alpha_3^2 = I, {beta, alpha_3} = 0); gamma5 = -i (i gamma5)
/// squares to I and anticommutes with both; the x3 matrix equals the standard
/// alpha_3 up to sign and beta equals the standard gamma^0.
inline AlgebraReport check_representation(const Representation& rep) {
  AlgebraReport report{rep.tag, {}};
  auto& out = report.residuals;
  const Matrix4 I = identity4();
  const complex i{0.0, 1.0};

  if (rep.tag == RepresentationTag::Standard) {
    detail::add_standard_checks(out);
    out.push_back({"gamma0_matches_construction", max_abs_diff(rep.gamma0, build_gamma(0))});
    out.push_back({"gamma3_matches_construction", max_abs_diff(rep.gamma3, build_gamma(3))});
    out.push_back({"gamma5_matches_construction",
                   max_abs_diff(rep.gamma5_times_i, Matrix4(i * build_gamma5()))});
    return report;
  }

  const Matrix4 eta = build_eta();
  const Matrix4 eta_dag = eta.adjoint();
  out.push_back({"eta_nilpotent", max_abs(eta * eta)});
  out.push_back({"eta_dagger_nilpotent", max_abs(eta_dag * eta_dag)});
  out.push_back({"eta_anticommutator", max_abs_diff(anticommutator(eta, eta_dag), Matrix4(2.0 * I))});
  out.push_back({"eta_trace", std::abs(eta.trace())});
  out.push_back({"eta_determinant", std::abs(eta.determinant())});

  const Matrix4& beta = rep.gamma0;
  const Matrix4& a3 = rep.gamma3;
  out.push_back({"beta_involution", max_abs_diff(beta * beta, I)});
  out.push_back({"alpha3_involution", max_abs_diff(a3 * a3, I)});
  out.push_back({"beta_alpha3_anticommute", max_abs(anticommutator(beta, a3))});

  const Matrix4 g5 = -i * rep.gamma5_times_i;
  out.push_back({"gamma5_squared", max_abs_diff(g5 * g5, I)});
  out.push_back({"gamma5_anticommutation",
                 std::max(max_abs(anticommutator(g5, beta)), max_abs(anticommutator(g5, a3)))});

  const Matrix4 std_alpha3 = build_alpha3();
  out.push_back({"gamma3_is_signed_alpha3",
                 std::min(max_abs_diff(a3, std_alpha3), max_abs_diff(a3, Matrix4(-std_alpha3)))});
  out.push_back({"beta_is_standard_gamma0", max_abs_diff(beta, build_gamma(0))});
  return report;
}

}  // namespace tunneling
