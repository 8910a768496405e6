#pragma once

// Dimensionless barrier problem and its regime-specific kinematics.
//
// Units: hbar = c = V0 = 1. The barrier strength u = V0 a / (hbar c) is then
// the barrier width, and wavenumbers multiplied by a are wavenumber * u.

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "tunneling/errors.hpp"

namespace tunneling {

enum class Regime { Relativistic, NonRelativistic, SuperRelativistic };

inline std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Relativistic: return "rel";
    case Regime::NonRelativistic: return "nonrel";
    case Regime::SuperRelativistic: return "superrel";
  }
  return "unknown";
}

inline std::optional<Regime> parse_regime(std::string_view s) {
  if (s == "rel") return Regime::Relativistic;
  if (s == "nonrel") return Regime::NonRelativistic;
  if (s == "superrel") return Regime::SuperRelativistic;
  return std::nullopt;
}

/// Problem definition.
///
/// `mu_ratio` is mc^2/V0 for the relativistic and non-relativistic regimes
/// and V0/mc^2 for the super-relativistic one. `eps` is E/V0 (relativistic)
/// or E_k/V0 (the other two).
struct BarrierSpec {
  double u = 0.0;
  double mu_ratio = 0.0;
  double eps = 0.0;
  Regime regime = Regime::Relativistic;

  void validate() const {
    if (!(u > 0.0) || !std::isfinite(u)) throw ContractViolation("barrier strength u must be positive");
    if (!(mu_ratio > 0.0) || !std::isfinite(mu_ratio))
      throw ContractViolation("mass ratio must be positive");
    if (!(eps > 0.0 && eps < 1.0)) throw ContractViolation("energy ratio must lie in (0, 1)");
  }

  BarrierSpec with_eps(double e) const {
    BarrierSpec s = *this;
    s.eps = e;
    return s;
  }
  BarrierSpec with_u(double w) const {
    BarrierSpec s = *this;
    s.u = w;
    return s;
  }

  /// Rest energy in units of V0.
  double rest_energy() const {
    return regime == Regime::SuperRelativistic ? 1.0 / mu_ratio : mu_ratio;
  }
};

/// Open interval of energy ratios for which every square root is real.
inline std::pair<double, double> admissible_window(Regime regime, double mu_ratio) {
  if (regime == Regime::Relativistic)
    return {std::max(0.0, 1.0 - mu_ratio), std::min(1.0, mu_ratio)};
  return {0.0, 1.0};
}

/// Derived quantities. `k` and `q` are multiplied by the barrier width a.
///
/// Relativistic: hbar c k = sqrt(m^2c^4 - E^2), hbar c q = sqrt(m^2c^4 - (V0-E)^2),
/// E'^2 = 2 m^2c^4 - (E-V0)^2, Gamma = hbar c k/E, Gamma' = hbar c q/E',
/// Xi = k E'/(q E).
///
/// Non-relativistic: k' = sqrt(2 m E_k)/hbar, q' = sqrt(2 m (V0-E_k))/hbar,
/// E ~ E' ~ mc^2, so Gamma = hbar k'/mc, Gamma' = hbar q'/mc, Xi = k'/q'.
///
/// Super-relativistic (k holds p, q holds p'): p = sqrt(2 m E_k)/hbar,
/// p' = sqrt(2 m (V0-E_k))/hbar, E'_k = V0 - E_k, Gamma = cp/E_k,
/// Gamma' = cp'/E'_k, Xi = Gamma/Gamma'.
struct Kinematics {
  double k = 0.0;
  double q = 0.0;
  double Gamma = 0.0;
  double GammaPrime = 0.0;
  double Xi = 0.0;
  double Eprime = 0.0;
  /// Rest energy mc^2 / V0.
  double mass = 0.0;
  /// Barrier strength, so k/u is the wavenumber in units of V0/(hbar c).
  double u = 0.0;

  double wavenumber() const { return k / u; }
  double barrier_wavenumber() const { return q / u; }
};

inline double checked_sqrt(std::string_view name, double value) {
  if (!(value > 0.0)) throw NonPositiveRootArgument(std::string(name), value);
  return std::sqrt(value);
}

inline Kinematics kinematics(const BarrierSpec& spec) {
  spec.validate();
  const double e = spec.eps;
  Kinematics kin;
  kin.u = spec.u;
  kin.mass = spec.rest_energy();
  const double m = kin.mass;

  switch (spec.regime) {
    case Regime::Relativistic: {
      const double k = checked_sqrt("m^2c^4 - E^2", m * m - e * e);
      const double q = checked_sqrt("m^2c^4 - (V0 - E)^2", m * m - (1.0 - e) * (1.0 - e));
      const double ep = checked_sqrt("2m^2c^4 - (E - V0)^2", 2.0 * m * m - (e - 1.0) * (e - 1.0));
      kin.k = k * spec.u;
      kin.q = q * spec.u;
      kin.Eprime = ep;
      kin.Gamma = k / e;
      kin.GammaPrime = q / ep;
      kin.Xi = k * ep / (q * e);
      break;
    }
    case Regime::NonRelativistic: {
      const double k = checked_sqrt("2 m E_k", 2.0 * m * e);
      const double q = checked_sqrt("2 m (V0 - E_k)", 2.0 * m * (1.0 - e));
      kin.k = k * spec.u;
      kin.q = q * spec.u;
      kin.Eprime = m;
      kin.Gamma = k / m;
      kin.GammaPrime = q / m;
      kin.Xi = k / q;
      break;
    }
    case Regime::SuperRelativistic: {
      const double p = checked_sqrt("2 m E_k", 2.0 * m * e);
      const double pp = checked_sqrt("2 m (V0 - E_k)", 2.0 * m * (1.0 - e));
      const double ekp = 1.0 - e;
      kin.k = p * spec.u;
      kin.q = pp * spec.u;
      kin.Eprime = ekp;
      kin.Gamma = p / e;
      kin.GammaPrime = pp / ekp;
      kin.Xi = kin.Gamma / kin.GammaPrime;
      break;
    }
  }
  return kin;
}

}  // namespace tunneling
