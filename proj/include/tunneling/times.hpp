#pragma once

// Closed-form tunneling times: dwell, self-interference and group time for
// finite and very wide barriers in the three energy regimes.
//
// Every time is reported in units of tau0 = a/c. With hbar = c = V0 = 1 the
// natural time unit is hbar/V0, and tau0 = u in that unit.

#include <cmath>
#include <complex>
#include <variant>
#include <vector>

#include "tunneling/barrier.hpp"
#include "tunneling/errors.hpp"
#include "tunneling/scattering.hpp"

namespace tunneling {

/// Finite-barrier formulas are refused above this barrier exponent:
/// sinh(2 q a) overflows near q a = 355.
inline constexpr double kFiniteBarrierGuard = 350.0;

/// Speed of light in m/s, for converting tau0-normalized times to seconds.
inline constexpr double kSpeedOfLight = 299792458.0;

struct TimeSet {
  double tau_d = 0.0;
  double tau_i = 0.0;
  double tau_g = 0.0;
  Regime regime = Regime::Relativistic;
  bool wide_limit = false;
};

struct SpinTimeSet {
  double tau_d_up = 0.0;
  double tau_d_down = 0.0;
  double tau_i = 0.0;
  double tau_g = 0.0;
  /// Group time with the spin-down dwell left out.
  double tau_g_up = 0.0;
  bool wide_limit = false;
};

using AnyTimes = std::variant<TimeSet, SpinTimeSet>;

/// sinh(x)/x, exact to double precision near zero.
inline double sinhc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sinh(x) / x;
}

/// tau/tau0 -> tau in units of hbar/V0.
inline double to_natural_units(double tau_over_tau0, double u) { return tau_over_tau0 * u; }

/// tau/tau0 -> seconds for a barrier of width `a_meters`.
inline double to_seconds(double tau_over_tau0, double a_meters) {
  return tau_over_tau0 * (a_meters / kSpeedOfLight);
}

inline double from_seconds(double seconds, double a_meters) {
  return seconds / (a_meters / kSpeedOfLight);
}

namespace detail {

inline void require_regime(const BarrierSpec& spec, Regime expected, const char* op) {
  if (spec.regime != expected)
    throw ContractViolation(std::string(op) + ": wrong regime '" + std::string(to_string(spec.regime)) + "'");
}

inline void guard_finite(double qa) {
  if (!(qa <= kFiniteBarrierGuard)) throw OverflowGuard(qa);
}

}  // namespace detail

inline TimeSet times_relativistic(const BarrierSpec& spec) {
  detail::require_regime(spec, Regime::Relativistic, "times_relativistic");
  const Kinematics kin = kinematics(spec);
  detail::guard_finite(kin.q);
  const CoefficientSet c = solve_relativistic(spec);

  const double m2 = kin.mass * kin.mass;
  const double xi = kin.Xi;
  const double xi2 = xi * xi;
  const double qa = kin.q;
  const double ka = kin.k;
  const double t2 = c.mag2_T;
  const double gap = 1.0 - spec.eps;
  const double s = sinhc(2.0 * qa);

  TimeSet t;
  t.regime = spec.regime;
  const double bracket = m2 * (1.0 + xi2) * s + (3.0 * m2 - 2.0 * gap * gap) * (1.0 - xi2);
  t.tau_d = t2 * spec.u * bracket / (4.0 * qa * xi * kin.Eprime);
  // u sinh(2qa) / (ka)^2 written via sinhc so that u -> 0 stays finite.
  t.tau_i = m2 * t2 * (1.0 + xi2) * (2.0 * spec.u * qa * s) / (4.0 * ka * ka * xi * spec.eps);
  t.tau_g = t.tau_d + t.tau_i;
  return t;
}

/// Hartman plateau of the relativistic times (a -> infinity).
inline TimeSet times_relativistic_wide(const BarrierSpec& spec) {
  detail::require_regime(spec, Regime::Relativistic, "times_relativistic_wide");
  const Kinematics kin = kinematics(spec);
  const double m2 = kin.mass * kin.mass;
  const double f = kin.Xi / (1.0 + kin.Xi * kin.Xi);
  const double k = kin.wavenumber();
  const double q = kin.barrier_wavenumber();

  TimeSet t;
  t.regime = spec.regime;
  t.wide_limit = true;
  t.tau_d = m2 * f / (q * q * kin.Eprime) / spec.u;
  t.tau_i = 2.0 * m2 * f / (k * k * spec.eps) / spec.u;
  t.tau_g = m2 * f * (1.0 / (q * q * kin.Eprime) + 2.0 / (k * k * spec.eps)) / spec.u;
  return t;
}

/// Non-relativistic finite-barrier times. The group time is the sum of dwell
/// and self-interference times.
inline TimeSet times_nonrel(const BarrierSpec& spec) {
  detail::require_regime(spec, Regime::NonRelativistic, "times_nonrel");
  const Kinematics kin = kinematics(spec);
  detail::guard_finite(kin.q);
  const CoefficientSet c = solve_relativistic(spec);

  const double m = kin.mass;
  const double k = kin.wavenumber();
  const double q = kin.barrier_wavenumber();
  const double kq2 = (k * k) / (q * q);
  const double s = sinhc(2.0 * kin.q);
  const double t2 = c.mag2_T;

  TimeSet t;
  t.regime = spec.regime;
  t.tau_i = m * t2 / (2.0 * k) * (1.0 + 1.0 / kq2) * s;
  t.tau_d = m * t2 / (4.0 * k) * ((1.0 + kq2) * s + (1.0 - kq2));
  t.tau_g = t.tau_d + t.tau_i;
  return t;
}

inline TimeSet times_nonrel_wide(const BarrierSpec& spec) {
  detail::require_regime(spec, Regime::NonRelativistic, "times_nonrel_wide");
  const Kinematics kin = kinematics(spec);
  const double m = kin.mass;
  const double f = kin.Xi / (1.0 + kin.Xi * kin.Xi);
  const double k = kin.wavenumber();
  const double q = kin.barrier_wavenumber();

  TimeSet t;
  t.regime = spec.regime;
  t.wide_limit = true;
  t.tau_d = m * f / (q * q) / spec.u;
  t.tau_i = 2.0 * m * f / (k * k) / spec.u;
  t.tau_g = m * f * (1.0 / (q * q) + 2.0 / (k * k)) / spec.u;
  return t;
}

namespace detail {

/// (E_k - V0) / (2 m c^2).
inline double kinetic_offset(const BarrierSpec& spec, const Kinematics& kin) {
  return (spec.eps - 1.0) / (2.0 * kin.mass);
}

/// Dwell time for one spin channel of transmission probability `t2`.
/// The defining relation carries a leading minus; this is the time after
/// solving for it.
inline double superrel_dwell(const BarrierSpec& spec, const Kinematics& kin, double t2) {
  const double m = kin.mass;
  const double pp = kin.barrier_wavenumber();
  const double xi = kin.Xi;
  const double xi2 = xi * xi;
  const double b = kinetic_offset(spec, kin);
  const double bracket = (b - 1.0) * (1.0 + xi2) * sinhc(2.0 * kin.q) + (b + 1.0) * (1.0 - xi2);
  return -(m * t2 / (2.0 * pp * xi)) * bracket;
}

}  // namespace detail

/// Spin-resolved finite-barrier times. Spin up uses |T|^2, spin down |T'|^2;
/// the self-interference term involves the spin-up channel only.
inline SpinTimeSet times_superrel(const BarrierSpec& spec, const SpinCoefficientSet& coeffs) {
  detail::require_regime(spec, Regime::SuperRelativistic, "times_superrel");
  const Kinematics kin = kinematics(spec);
  if (std::abs(kin.q - coeffs.kin.q) > 1e-12 * std::max(1.0, kin.q))
    throw ContractViolation("times_superrel: coefficients were solved for a different spec");
  detail::guard_finite(kin.q);

  const double m = kin.mass;
  const double p = kin.wavenumber();
  const double xi = kin.Xi;

  SpinTimeSet t;
  t.tau_d_up = detail::superrel_dwell(spec, kin, coeffs.mag2_T);
  t.tau_d_down = detail::superrel_dwell(spec, kin, coeffs.mag2_Tprime);
  // m |T|^2 (1 + Xi^2) sinh(2 p'a) / (4 hbar p^2 Xi), divided by tau0 = u.
  t.tau_i = m * coeffs.mag2_T * (1.0 + xi * xi) * (2.0 * kin.q * sinhc(2.0 * kin.q)) /
            (4.0 * p * p * xi) / spec.u;
  t.tau_g = t.tau_d_up + t.tau_d_down + t.tau_i;
  t.tau_g_up = t.tau_d_up + t.tau_i;
  return t;
}

/// Wide-barrier plateau of the spin-resolved times. Contains no amplitudes,
/// so it does not depend on B'.
inline SpinTimeSet times_superrel_wide(const BarrierSpec& spec) {
  detail::require_regime(spec, Regime::SuperRelativistic, "times_superrel_wide");
  const Kinematics kin = kinematics(spec);
  const double m = kin.mass;
  const double p = kin.wavenumber();
  const double pp = kin.barrier_wavenumber();
  const double f = kin.Xi / (1.0 + kin.Xi * kin.Xi);
  const double b = detail::kinetic_offset(spec, kin);

  SpinTimeSet t;
  t.wide_limit = true;
  t.tau_d_up = -2.0 * m * (b - 1.0) * f / (pp * pp) / spec.u;
  t.tau_d_down = t.tau_d_up;
  t.tau_i = 2.0 * m * f / (p * p) / spec.u;
  const double shifted = (spec.eps - 1.0) / m - 2.0;  // (E_k - V0)/mc^2 - 2
  t.tau_g = -2.0 * m * f * (shifted / (pp * pp) - 1.0 / (p * p)) / spec.u;
  t.tau_g_up = t.tau_d_up + t.tau_i;
  return t;
}

/// Spin-down reflection amplitude |B'| = 2 Xi / sqrt(1 + Xi^2). For this
/// width-independent value the spin-down transmission probability has the
/// same wide-barrier asymptotics as the spin-up one, so the finite spin-down
/// dwell time saturates to the same plateau.
inline double plateau_matched_bprime(const BarrierSpec& spec) {
  const Kinematics kin = kinematics(spec);
  return 2.0 * kin.Xi / std::sqrt(1.0 + kin.Xi * kin.Xi);
}

/// Dispatches to the finite or wide-barrier formulas of the spec's regime.
inline AnyTimes evaluate_times(const BarrierSpec& spec, bool wide, complex bprime = {}) {
  switch (spec.regime) {
    case Regime::Relativistic:
      return wide ? times_relativistic_wide(spec) : times_relativistic(spec);
    case Regime::NonRelativistic:
      return wide ? times_nonrel_wide(spec) : times_nonrel(spec);
    case Regime::SuperRelativistic:
      return wide ? times_superrel_wide(spec) : times_superrel(spec, solve_superrel(spec, bprime));
  }
  throw ContractViolation("unknown regime");
}

/// |tau_g - (sum of parts)| / |tau_g|.
inline double decomposition_residual(const TimeSet& t) {
  return std::abs(t.tau_g - (t.tau_d + t.tau_i)) / std::abs(t.tau_g);
}

inline double decomposition_residual(const SpinTimeSet& t) {
  const double total = std::abs(t.tau_g - (t.tau_d_up + t.tau_d_down + t.tau_i)) / std::abs(t.tau_g);
  const double up = std::abs(t.tau_g_up - (t.tau_d_up + t.tau_i)) / std::abs(t.tau_g_up);
  return std::max(total, up);
}

inline double decomposition_residual(const AnyTimes& t) {
  return std::visit([](const auto& v) { return decomposition_residual(v); }, t);
}

struct HartmanPoint {
  double u;
  AnyTimes times;
};

/// Finite-barrier times as a function of barrier strength (width). Widths
/// must be ascending; for the super-relativistic regime `bprime` is the
/// spin-down reflection amplitude used at every width.
inline std::vector<HartmanPoint> hartman_scan(const BarrierSpec& spec, std::span<const double> u_values,
                                              complex bprime = {}) {
  if (u_values.empty()) throw ContractViolation("hartman_scan needs at least one width");
  for (std::size_t n = 1; n < u_values.size(); ++n)
    if (!(u_values[n] > u_values[n - 1])) throw ContractViolation("hartman_scan widths must ascend");
  std::vector<HartmanPoint> out;
  out.reserve(u_values.size());
  for (double u : u_values) out.push_back({u, evaluate_times(spec.with_u(u), false, bprime)});
  return out;
}

}  // namespace tunneling
