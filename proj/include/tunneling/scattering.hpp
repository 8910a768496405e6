#pragma once

// Rectangular-barrier matching: closed-form amplitudes, piecewise spinor
// solution and the conserved flux.
//
// Positions are in units of the barrier width a: region I is x <= 0, the
// barrier (region II) is 0 <= x <= 1 and region III is x >= 1. The incident
// amplitude A is fixed to 1.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

#include "tunneling/algebra.hpp"
#include "tunneling/barrier.hpp"
#include "tunneling/errors.hpp"

namespace tunneling {

/// Above this barrier exponent cosh/sinh overflow double precision.
inline constexpr double kMatchingOverflow = 700.0;

enum class Region { I, II, III };

struct CoefficientSet {
  Kinematics kin;
  complex A{1.0, 0.0};
  complex B, C, D, F;
  double phase_T = 0.0;
  double phase_R = 0.0;
  double mag2_T = 0.0;
  double mag2_R = 0.0;
};

/// Spin-resolved amplitudes. A' and F carry spin up, B' and G spin down.
struct SpinCoefficientSet {
  Kinematics kin;
  complex A{1.0, 0.0};
  complex Aprime, Bprime, C, Cprime, D, Dprime, F, G;
  /// Upsilon^2 = sqrt(1 + Gamma^2), and the barrier analogue with Gamma'.
  double UpsilonSq = 1.0;
  double UpsilonPrimeSq = 1.0;
  double phase_T = 0.0;
  double phase_R = 0.0;
  double phase_Tprime = 0.0;
  double phase_Rprime = 0.0;
  double mag2_T = 0.0;
  double mag2_R = 0.0;
  double mag2_Tprime = 0.0;
  double mag2_Rprime = 0.0;

  double total_probability() const { return mag2_T + mag2_Tprime + mag2_R + mag2_Rprime; }
};

namespace detail {

inline void require_barrier_exponent(double qa) {
  if (!(qa < kMatchingOverflow))
    throw DegenerateMatching("barrier exponent q*a = " + std::to_string(qa) +
                             " overflows the closed-form amplitudes");
}

/// F = {cosh(qa) - (i/2)(Xi - 1/Xi) sinh(qa)}^{-1}; shared by both settings.
inline complex transmission_amplitude(double qa, double xi) {
  const complex i{0.0, 1.0};
  return 1.0 / (std::cosh(qa) - 0.5 * i * (xi - 1.0 / xi) * std::sinh(qa));
}

}  // namespace detail

/// Closed-form amplitudes for the relativistic and non-relativistic regimes.
inline CoefficientSet solve_relativistic(const BarrierSpec& spec) {
  if (spec.regime == Regime::SuperRelativistic)
    throw ContractViolation("solve_relativistic needs the relativistic or non-relativistic regime");
  const Kinematics kin = kinematics(spec);
  const double qa = kin.q;
  const double xi = kin.Xi;
  detail::require_barrier_exponent(qa);

  const complex i{0.0, 1.0};
  CoefficientSet c;
  c.kin = kin;
  c.F = detail::transmission_amplitude(qa, xi);
  c.B = -0.5 * i * ((1.0 + xi * xi) / xi) * std::sinh(qa) * c.F;
  c.C = 0.5 * (1.0 + i * xi) * std::exp(-qa) * c.F;
  c.D = 0.5 * (1.0 - i * xi) * std::exp(qa) * c.F;
  c.phase_T = std::arg(c.F);
  c.phase_R = std::arg(c.B);
  c.mag2_T = std::norm(c.F);
  c.mag2_R = std::norm(c.B);
  return c;
}

/// Spin-resolved amplitudes for the super-relativistic regime. The spin-down
/// reflection amplitude B' is not fixed by the incident wave, so the caller
/// supplies it; every spin-down amplitude is proportional to it.
inline SpinCoefficientSet solve_superrel(const BarrierSpec& spec, complex bprime = {}) {
  if (spec.regime != Regime::SuperRelativistic)
    throw ContractViolation("solve_superrel needs the super-relativistic regime");
  const Kinematics kin = kinematics(spec);
  const double pa = kin.q;
  const double xi = kin.Xi;
  detail::require_barrier_exponent(pa);

  const complex i{0.0, 1.0};
  SpinCoefficientSet c;
  c.kin = kin;
  c.UpsilonSq = std::sqrt(1.0 + kin.Gamma * kin.Gamma);
  c.UpsilonPrimeSq = std::sqrt(1.0 + kin.GammaPrime * kin.GammaPrime);
  const double ratio = c.UpsilonPrimeSq / (2.0 * c.UpsilonSq);

  c.F = detail::transmission_amplitude(pa, xi);
  c.Aprime = -0.5 * i * ((1.0 + xi * xi) / xi) * std::sinh(pa) * c.F;
  c.C = ratio * (1.0 - i * xi) * std::exp(pa) * c.F;
  c.Cprime = ratio * (1.0 + i * xi) * std::exp(-pa) * c.F;

  c.Bprime = bprime;
  c.G = bprime / (std::cosh(pa) - i * xi * std::sinh(pa));
  c.D = ratio * (1.0 - i * xi) * std::exp(pa) * c.G;
  c.Dprime = ratio * (1.0 + i * xi) * std::exp(-pa) * c.G;

  c.phase_T = std::arg(c.F);
  c.phase_R = std::arg(c.Aprime);
  c.phase_Tprime = std::arg(c.G);
  c.phase_Rprime = std::arg(c.Bprime);
  c.mag2_T = std::norm(c.F);
  c.mag2_R = std::norm(c.Aprime);
  c.mag2_Tprime = std::norm(c.G);
  c.mag2_Rprime = std::norm(c.Bprime);
  return c;
}

namespace detail {

inline void require_region(double x, Region region) {
  const bool ok = (region == Region::I && x <= 0.0) ||
                  (region == Region::II && x >= 0.0 && x <= 1.0) ||
                  (region == Region::III && x >= 1.0);
  if (!ok) throw ContractViolation("position " + std::to_string(x) + " is not in the requested region");
}

inline Spinor spinor(complex a, complex b, complex c, complex d) {
  Spinor s;
  s << a, b, c, d;
  return s;
}

}  // namespace detail

/// Piecewise solution at position x (units of a).
inline Spinor wavefunction_at(const CoefficientSet& c, double x, Region region) {
  detail::require_region(x, region);
  const complex i{0.0, 1.0};
  const double ka = c.kin.k;
  const double qa = c.kin.q;
  const double g = c.kin.Gamma;
  const double gp = c.kin.GammaPrime;
  switch (region) {
    case Region::I: {
      const complex in = c.A * std::exp(i * ka * x);
      const complex out = c.B * std::exp(-i * ka * x);
      return detail::spinor(in + out, 0.0, -g * in + g * out, 0.0);
    }
    case Region::II: {
      const complex grow = c.C * std::exp(qa * x);
      const complex decay = c.D * std::exp(-qa * x);
      return detail::spinor(grow + decay, 0.0, i * gp * (grow - decay), 0.0);
    }
    case Region::III: {
      const complex t = c.F * std::exp(i * ka * (x - 1.0));
      return detail::spinor(t, 0.0, -g * t, 0.0);
    }
  }
  return Spinor::Zero();
}

/// Spin-resolved piecewise solution. In the barrier, both spin-down modes use
/// the barrier wavenumber p' and ratio Gamma'.
inline Spinor wavefunction_at(const SpinCoefficientSet& c, double x, Region region) {
  detail::require_region(x, region);
  const complex i{0.0, 1.0};
  const double pa = c.kin.k;
  const double ppa = c.kin.q;
  const double g = c.kin.Gamma;
  const double gp = c.kin.GammaPrime;
  switch (region) {
    case Region::I: {
      const complex in = c.A * std::exp(i * pa * x);
      const complex out = c.Aprime * std::exp(-i * pa * x);
      const complex down = c.Bprime * std::exp(-i * pa * x);
      return detail::spinor(in + out, down, g * (in - out), -g * down) / c.UpsilonSq;
    }
    case Region::II: {
      const complex decay = std::exp(-ppa * x);
      const complex grow = std::exp(ppa * x);
      const complex up1 = c.C * decay + c.Cprime * grow;
      const complex up3 = i * gp * (c.C * decay - c.Cprime * grow);
      const complex dn2 = c.D * decay + c.Dprime * grow;
      const complex dn4 = i * gp * (c.D * decay - c.Dprime * grow);
      return detail::spinor(up1, dn2, up3, dn4) / c.UpsilonPrimeSq;
    }
    case Region::III: {
      const complex ph = std::exp(i * pa * (x - 1.0));
      return detail::spinor(c.F * ph, c.G * ph, g * c.F * ph, g * c.G * ph) / c.UpsilonSq;
    }
  }
  return Spinor::Zero();
}

/// Region containing x; the barrier owns both of its endpoints.
inline Region region_of(double x) {
  if (x < 0.0) return Region::I;
  if (x <= 1.0) return Region::II;
  return Region::III;
}

/// Probability flux in units of c: J = psi^dagger alpha_3 psi with the
/// alternative-representation alpha_3. For the stationary solutions this is
/// the bilinear that is x-independent (it reduces to 2 Re(phi1* phi3) for a
/// spin-up state, which is continuous and constant in every region).
template <class Coefficients>
double probability_current(const Coefficients& c, double x, Region region) {
  const Spinor psi = wavefunction_at(c, x, region);
  return (psi.adjoint() * alternative_alpha3() * psi)(0, 0).real();
}

/// Spin basis vectors phi^{up/down}_{+/-} / Upsilon^2 of the super-relativistic
/// solution; `sign` selects the sign in front of Gamma.
inline Spinor spin_basis(double gamma, int sign, bool spin_up) {
  const double ups = std::sqrt(1.0 + gamma * gamma);
  const double g = sign >= 0 ? gamma : -gamma;
  Spinor s = spin_up ? detail::spinor(1.0, 0.0, g, 0.0) : detail::spinor(0.0, 1.0, 0.0, g);
  return s / ups;
}

/// Removes 2*pi jumps from a sequence of principal-branch phases in place.
inline void unwrap_phases(std::span<double> phases) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double offset = 0.0;
  for (std::size_t n = 1; n < phases.size(); ++n) {
    const double raw = phases[n] + offset;
    const double jump = raw - phases[n - 1];
    const double correction = -two_pi * std::round(jump / two_pi);
    offset += correction;
    phases[n] = raw + correction;
  }
}

}  // namespace tunneling
