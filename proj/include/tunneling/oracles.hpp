#pragma once

// Independent numerical checks for the closed forms: finite-difference
// energy derivatives of phases, quadrature of barrier densities, direct
// solves of the boundary-condition systems, and flux audits.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "tunneling/algebra.hpp"
#include "tunneling/barrier.hpp"
#include "tunneling/errors.hpp"
#include "tunneling/quadrature.hpp"
#include "tunneling/scattering.hpp"

namespace tunneling {

/// Seed for randomized oracle batches.
inline constexpr std::uint64_t kOracleSeed = 20260415;

enum class FDScheme { Central2, Central4 };

struct FDConfig {
  /// Energy step relative to the energy ratio.
  double step = 1e-5;
  FDScheme scheme = FDScheme::Central4;
  bool unwrap = true;

  void validate() const {
    if (!(step > 1e-10 && step < 1e-2)) throw ContractViolation("finite-difference step must lie in (1e-10, 1e-2)");
  }
};

enum class PhaseChannel { T, R };

namespace detail {

inline std::vector<double> stencil_offsets(FDScheme scheme) {
  if (scheme == FDScheme::Central2) return {-1.0, 1.0};
  return {-2.0, -1.0, 1.0, 2.0};
}

inline std::vector<double> stencil_weights(FDScheme scheme) {
  if (scheme == FDScheme::Central2) return {-0.5, 0.5};
  return {1.0 / 12.0, -8.0 / 12.0, 8.0 / 12.0, -1.0 / 12.0};
}

/// Evaluates f at a stencil point, turning window violations into
/// StencilOutOfDomain.
template <class Func>
auto at_stencil_point(Func&& f, const BarrierSpec& spec, double eps) {
  if (!(eps > 0.0 && eps < 1.0))
    throw StencilOutOfDomain("stencil point eps = " + std::to_string(eps) + " leaves (0, 1)");
  try {
    return f(spec.with_eps(eps));
  } catch (const NonPositiveRootArgument& e) {
    throw StencilOutOfDomain(std::string("stencil point outside the regime window: ") + e.what());
  }
}

/// d f / d eps by central differences; f maps a spec to a value.
template <class Func>
auto fd_derivative(Func&& f, const BarrierSpec& spec, const FDConfig& cfg) {
  cfg.validate();
  const double h = cfg.step * spec.eps;
  const auto offsets = stencil_offsets(cfg.scheme);
  const auto weights = stencil_weights(cfg.scheme);
  using Value = decltype(f(spec));
  Value acc{};
  for (std::size_t n = 0; n < offsets.size(); ++n)
    acc += weights[n] * at_stencil_point(f, spec, spec.eps + offsets[n] * h);
  return Value(acc / h);
}

inline double channel_phase(const BarrierSpec& s, PhaseChannel which, complex bprime) {
  if (s.regime == Regime::SuperRelativistic) {
    const auto c = solve_superrel(s, bprime);
    return which == PhaseChannel::T ? c.phase_T : c.phase_R;
  }
  const auto c = solve_relativistic(s);
  return which == PhaseChannel::T ? c.phase_T : c.phase_R;
}

inline double gamma_of(const BarrierSpec& s) { return kinematics(s).Gamma; }

}  // namespace detail

/// hbar d(phi)/dE for the transmitted or reflected phase, in units of tau0.
/// The energy variable is E for the relativistic regime and E_k otherwise.
inline double phase_time_fd(const BarrierSpec& spec, PhaseChannel which, const FDConfig& cfg = {},
                            complex bprime = {}) {
  cfg.validate();
  const double centre = detail::channel_phase(spec, which, bprime);
  auto phase = [&](const BarrierSpec& s) {
    double ph = detail::channel_phase(s, which, bprime);
    if (cfg.unwrap) {
      constexpr double two_pi = 2.0 * std::numbers::pi;
      ph -= two_pi * std::round((ph - centre) / two_pi);
    }
    return ph;
  };
  return detail::fd_derivative(phase, spec, cfg) / spec.u;
}

/// |T|^2 tau_gT + |R|^2 tau_gR from finite-difference phase derivatives
/// (plus the spin-down transmission term in the super-relativistic regime;
/// the spin-down reflection phase is fixed by the caller and does not vary).
inline double group_time_fd(const BarrierSpec& spec, const FDConfig& cfg = {}, complex bprime = {}) {
  const double tT = phase_time_fd(spec, PhaseChannel::T, cfg, bprime);
  const double tR = phase_time_fd(spec, PhaseChannel::R, cfg, bprime);
  if (spec.regime == Regime::SuperRelativistic) {
    const auto c = solve_superrel(spec, bprime);
    double total = c.mag2_T * tT + c.mag2_R * tR;
    if (c.mag2_Tprime > 0.0) {
      const double centre = c.phase_Tprime;
      auto phase = [&](const BarrierSpec& s) {
        double ph = solve_superrel(s, bprime).phase_Tprime;
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (cfg.unwrap) ph -= two_pi * std::round((ph - centre) / two_pi);
        return ph;
      };
      total += c.mag2_Tprime * detail::fd_derivative(phase, spec, cfg) / spec.u;
    }
    return total;
  }
  const auto c = solve_relativistic(spec);
  return c.mag2_T * tT + c.mag2_R * tR;
}

/// -hbar Im(R) (dGamma/dE) / Gamma in units of tau0, with dGamma/dE by
/// finite differences.
inline double self_interference_fd(const BarrierSpec& spec, const FDConfig& cfg = {}) {
  const double gamma = detail::gamma_of(spec);
  const double dgamma = detail::fd_derivative(detail::gamma_of, spec, cfg);
  const double im_r = spec.regime == Regime::SuperRelativistic ? solve_superrel(spec).Aprime.imag()
                                                               : solve_relativistic(spec).B.imag();
  return -im_r * dgamma / gamma / spec.u;
}

/// Which barrier density a dwell integral uses.
enum class Density {
  /// Regime default: Beta (relativistic), LargeComponent (non-relativistic),
  /// Norm (super-relativistic, per spin).
  Auto,
  /// psi^dagger beta psi.
  Beta,
  /// |upper spinor components|^2, the non-relativistic limit of Beta.
  LargeComponent,
  /// psi^dagger psi.
  Norm,
};

namespace detail {

inline double density_value(const Spinor& psi, Density d, int first) {
  const double top = std::norm(psi(first));
  const double bottom = std::norm(psi(first + 2));
  switch (d) {
    case Density::Beta: return top - bottom;
    case Density::LargeComponent: return top;
    case Density::Norm: return top + bottom;
    case Density::Auto: break;
  }
  throw ContractViolation("density must be resolved before evaluation");
}

}  // namespace detail

/// Dwell time from the barrier integral: int_0^a rho dx / (2 c Gamma), in
/// units of tau0 (positions in units of a, so the factor a cancels). Auto
/// means Beta here; the spec overload picks LargeComponent for nonrel.
inline double dwell_integral(const CoefficientSet& c, const QuadratureConfig& cfg = {},
                             Density density = Density::Auto) {
  if (density == Density::Auto) density = Density::Beta;
  const double integral = integrate(
      [&](double x) { return detail::density_value(wavefunction_at(c, x, Region::II), density, 0); }, 0.0, 1.0, cfg);
  return integral / (2.0 * c.kin.Gamma);
}

struct SpinDwell {
  double up = 0.0;
  double down = 0.0;
};

/// Per-spin dwell integrals Upsilon^4 int rho_s dx / (2 c Gamma), in units of
/// tau0. The Upsilon^4 factor undoes the spinor normalization carried by the
/// wavefunction.
inline SpinDwell dwell_integral(const SpinCoefficientSet& c, const QuadratureConfig& cfg = {},
                                Density density = Density::Auto) {
  if (density == Density::Auto) density = Density::Norm;
  const double scale = c.UpsilonSq * c.UpsilonSq / (2.0 * c.kin.Gamma);
  SpinDwell out;
  out.up = scale * integrate(
                       [&](double x) { return detail::density_value(wavefunction_at(c, x, Region::II), density, 0); },
                       0.0, 1.0, cfg);
  out.down = scale * integrate(
                         [&](double x) { return detail::density_value(wavefunction_at(c, x, Region::II), density, 1); },
                         0.0, 1.0, cfg);
  return out;
}

/// Regime-dispatched dwell integral. Non-relativistic specs use the large
/// component density.
inline double dwell_integral(const BarrierSpec& spec, const QuadratureConfig& cfg = {}) {
  if (spec.regime == Regime::SuperRelativistic) return dwell_integral(solve_superrel(spec), cfg).up;
  const Density d = spec.regime == Regime::NonRelativistic ? Density::LargeComponent : Density::Beta;
  return dwell_integral(solve_relativistic(spec), cfg, d);
}

/// Both sides of the energy-sensitivity relation
///   -i hbar c [psi^dagger alpha_3 d_E psi]_0^a = -int_0^a psi^dagger beta psi dx
/// in natural units (hbar = c = V0 = 1), with d_E psi by finite differences
/// at fixed position.
struct SensitivitySides {
  complex lhs;
  double rhs = 0.0;
  double residual = 0.0;
};

namespace detail {

inline Spinor solution_at(const BarrierSpec& s, double x, complex bprime) {
  const Region r = x <= 0.0 ? Region::I : Region::III;
  if (s.regime == Regime::SuperRelativistic) return wavefunction_at(solve_superrel(s, bprime), x, r);
  return wavefunction_at(solve_relativistic(s), x, r);
}

}  // namespace detail

inline SensitivitySides sensitivity_sides(const BarrierSpec& spec, const FDConfig& cfg_fd = {},
                                          const QuadratureConfig& cfg_quad = {}, complex bprime = {}) {
  const Matrix4& a3 = alternative_alpha3();
  const Matrix4& beta = alternative_beta();

  auto boundary = [&](double x) {
    const Spinor psi = detail::solution_at(spec, x, bprime);
    const Spinor dpsi = detail::fd_derivative(
        [&](const BarrierSpec& s) -> Spinor { return detail::solution_at(s, x, bprime); }, spec, cfg_fd);
    return complex((psi.adjoint() * a3 * dpsi)(0, 0));
  };
  const complex i{0.0, 1.0};
  SensitivitySides out;
  out.lhs = -i * (boundary(1.0) - boundary(0.0));

  double integral = 0.0;
  if (spec.regime == Regime::SuperRelativistic) {
    const auto c = solve_superrel(spec, bprime);
    integral = integrate([&](double x) { return (wavefunction_at(c, x, Region::II).adjoint() * beta *
                                                 wavefunction_at(c, x, Region::II))(0, 0).real(); },
                         0.0, 1.0, cfg_quad);
  } else {
    const auto c = solve_relativistic(spec);
    integral = integrate([&](double x) { return (wavefunction_at(c, x, Region::II).adjoint() * beta *
                                                 wavefunction_at(c, x, Region::II))(0, 0).real(); },
                         0.0, 1.0, cfg_quad);
  }
  out.rhs = -spec.u * integral;

  const double scale = std::max(std::abs(out.lhs), std::abs(out.rhs));
  out.residual = scale < 1e-14 ? 0.0 : std::abs(out.lhs - out.rhs) / scale;
  return out;
}

/// |LHS - RHS| / max(|LHS|, |RHS|) of the energy-sensitivity relation; zero
/// when both sides are below 1e-14.
inline double sensitivity_residual(const BarrierSpec& spec, const FDConfig& cfg_fd = {},
                                   const QuadratureConfig& cfg_quad = {}) {
  return sensitivity_sides(spec, cfg_fd, cfg_quad).residual;
}

/// Threshold on |det| of the boundary-condition matrix.
inline constexpr double kSingularDeterminant = 1e-14;

namespace detail {

using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;

inline Vector4c dense_solve(const Matrix4c& m, const Vector4c& rhs) {
  const Eigen::FullPivLU<Matrix4c> lu(m);
  if (std::abs(lu.determinant()) < kSingularDeterminant)
    throw SingularMatching("boundary-condition determinant below threshold");
  return lu.solve(rhs);
}

}  // namespace detail

/// Direct solve of the value-continuity conditions for spinor components 1
/// and 3 at x = 0 and x = a (relativistic and non-relativistic regimes).
///
/// Unknowns are (B, C e^{qa}, D, F) so every matrix entry is O(1).
inline CoefficientSet matching_solve(const BarrierSpec& spec) {
  if (spec.regime == Regime::SuperRelativistic)
    throw ContractViolation("matching_solve handles the relativistic and non-relativistic regimes");
  const Kinematics kin = kinematics(spec);
  detail::require_barrier_exponent(kin.q);
  const complex i{0.0, 1.0};
  const double g = kin.Gamma;
  const double gp = kin.GammaPrime;
  const double e = std::exp(-kin.q);

  detail::Matrix4c m;
  detail::Vector4c rhs;
  // Component 1 at x = 0: 1 + B = C + D.
  m.row(0) << 1.0, -e, -1.0, 0.0;
  rhs(0) = -1.0;
  // Component 3 at x = 0: -Gamma (1 - B) = i Gamma' (C - D).
  m.row(1) << g, -i * gp * e, i * gp, 0.0;
  rhs(1) = g;
  // Component 1 at x = a: C e^{qa} + D e^{-qa} = F.
  m.row(2) << 0.0, 1.0, e, -1.0;
  rhs(2) = 0.0;
  // Component 3 at x = a: i Gamma' (C e^{qa} - D e^{-qa}) = -Gamma F.
  m.row(3) << 0.0, i * gp, -i * gp * e, g;
  rhs(3) = 0.0;

  const detail::Vector4c x = detail::dense_solve(m, rhs);
  CoefficientSet c;
  c.kin = kin;
  c.B = x(0);
  c.C = x(1) * e;
  c.D = x(2);
  c.F = x(3);
  c.phase_T = std::arg(c.F);
  c.phase_R = std::arg(c.B);
  c.mag2_T = std::norm(c.F);
  c.mag2_R = std::norm(c.B);
  return c;
}

struct SpinMatchingResult {
  SpinCoefficientSet coeffs;
  /// |det| and rank of the homogeneous spin-down block.
  double spin_down_determinant = 0.0;
  int spin_down_rank = 0;
};

/// Direct solve of the value-continuity conditions for all four spinor
/// components in the super-relativistic regime. The spin-down block has no
/// source; when it is nonsingular its only solution is zero.
inline SpinMatchingResult matching_solve_spin(const BarrierSpec& spec) {
  if (spec.regime != Regime::SuperRelativistic)
    throw ContractViolation("matching_solve_spin handles the super-relativistic regime");
  const Kinematics kin = kinematics(spec);
  detail::require_barrier_exponent(kin.q);
  const complex i{0.0, 1.0};
  const double g = kin.Gamma;
  const double gp = kin.GammaPrime;
  const double ups = std::sqrt(1.0 + g * g);
  const double upsp = std::sqrt(1.0 + gp * gp);
  const double e = std::exp(-kin.q);

  // Unknowns (R, X, Y e^{p'a}, T) with barrier modes X e^{-p'x} + Y e^{p'x};
  // rows are the upper and lower component at x = 0 and x = a.
  detail::Matrix4c up;
  up.row(0) << 1.0 / ups, -1.0 / upsp, -e / upsp, 0.0;
  up.row(1) << -g / ups, -i * gp / upsp, i * gp * e / upsp, 0.0;
  up.row(2) << 0.0, e / upsp, 1.0 / upsp, -1.0 / ups;
  up.row(3) << 0.0, i * gp * e / upsp, -i * gp / upsp, -g / ups;
  detail::Vector4c rhs;
  rhs << -1.0 / ups, -g / ups, 0.0, 0.0;
  const detail::Vector4c x = detail::dense_solve(up, rhs);

  // Spin down: the reflected wave's lower component is -Gamma B', the same
  // coefficient that multiplies A' above, so the homogeneous block equals
  // the spin-up matrix.
  const Eigen::FullPivLU<detail::Matrix4c> lu_down(up);

  SpinMatchingResult out;
  out.spin_down_determinant = std::abs(lu_down.determinant());
  out.spin_down_rank = static_cast<int>(lu_down.rank());
  if (out.spin_down_determinant < kSingularDeterminant)
    throw SingularMatching("spin-down block is singular; the spin channels do not decouple");

  SpinCoefficientSet& c = out.coeffs;
  c.kin = kin;
  c.UpsilonSq = ups;
  c.UpsilonPrimeSq = upsp;
  c.Aprime = x(0);
  c.C = x(1);
  c.Cprime = x(2) * e;
  c.F = x(3);
  c.Bprime = c.G = c.D = c.Dprime = complex{};
  c.phase_T = std::arg(c.F);
  c.phase_R = std::arg(c.Aprime);
  c.mag2_T = std::norm(c.F);
  c.mag2_R = std::norm(c.Aprime);
  return out;
}

/// Max relative deviation of the flux sampled on n_samples points in each of
/// region I ([-1, 0]), II ([0, 1]) and III ([1, 2]) from its value at x = a.
template <class Coefficients>
double current_audit(const Coefficients& c, int n_samples) {
  if (n_samples < 2) throw ContractViolation("current_audit needs at least two samples per region");
  const double ref = probability_current(c, 1.0, Region::III);
  double worst = 0.0;
  auto sample = [&](double lo, Region r) {
    for (int n = 0; n < n_samples; ++n) {
      const double x = lo + static_cast<double>(n) / (n_samples - 1);
      const double j = probability_current(c, x, r);
      const double dev = ref == 0.0 ? std::abs(j) : std::abs(j - ref) / std::abs(ref);
      worst = std::max(worst, dev);
    }
  };
  sample(-1.0, Region::I);
  sample(0.0, Region::II);
  sample(1.0, Region::III);
  return worst;
}

/// Random admissible spec for oracle batches. Energy ratios keep a margin of
/// 5% of the window from each edge and barrier strengths stay in [0.5, 4 pi].
template <class Rng>
BarrierSpec random_admissible_spec(Regime regime, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  BarrierSpec s;
  s.regime = regime;
  s.u = 0.5 + unit(rng) * (4.0 * std::numbers::pi - 0.5);
  s.mu_ratio = regime == Regime::Relativistic ? 0.7 + 0.8 * unit(rng) : 0.5 + 1.5 * unit(rng);
  const auto [lo, hi] = admissible_window(regime, s.mu_ratio);
  const double margin = 0.05 * (hi - lo);
  s.eps = lo + margin + unit(rng) * (hi - lo - 2.0 * margin);
  return s;
}

}  // namespace tunneling
