#!/usr/bin/env python3
"""Extended-precision reference values for the C++ test suite.

Evaluates the barrier solutions and tunneling-time expressions with mpmath at
60 significant digits, using direct quadrature and high-order numerical
differentiation as the independent route. The output is written to
reference_values.hpp and committed; rerun this script to regenerate it.

Units: hbar = c = V0 = 1, so lengths are in hbar*c/V0 and the barrier width is
a = u. Normalized times are divided by tau0 = a/c = u.
"""
from pathlib import Path

from mpmath import (arg, conj, cosh, diff, exp, findroot, im, mp, mpf, pi,
                    quad, sinh, sqrt)

mp.dps = 60
U = 2 * pi
MU = mpf("0.98")


def rel_kin(e, mu=MU):
    k = sqrt(mu**2 - e**2)
    q = sqrt(mu**2 - (1 - e) ** 2)
    ep = sqrt(2 * mu**2 - (e - 1) ** 2)
    return dict(k=k, q=q, G=k / e, Gp=q / ep, Xi=k * ep / (q * e), Ep=ep)


def nr_kin(e, mu=MU):
    k = sqrt(2 * mu * e)
    q = sqrt(2 * mu * (1 - e))
    return dict(k=k, q=q, G=k / mu, Gp=q / mu, Xi=k / q, Ep=mu)


def sr_kin(e, vr=MU):
    m = 1 / vr
    p = sqrt(2 * m * e)
    pp = sqrt(2 * m * (1 - e))
    g, gp = p / e, pp / (1 - e)
    return dict(k=p, q=pp, G=g, Gp=gp, Xi=g / gp, Ep=1 - e, m=m)


def amplitudes(kin, u):
    Q = kin["q"] * u
    xi = kin["Xi"]
    F = 1 / (cosh(Q) - mpf(1) / 2 * 1j * (xi - 1 / xi) * sinh(Q))
    B = -mpf(1) / 2 * 1j * (1 + xi**2) / xi * sinh(Q) * F
    C = mpf(1) / 2 * (1 + 1j * xi) * exp(-Q) * F
    D = mpf(1) / 2 * (1 - 1j * xi) * exp(Q) * F
    return F, B, C, D


def spinor13(kinf, e, x, u):
    """Components 1 and 3 of the piecewise solution at physical position x."""
    kin = kinf(e)
    F, B, C, D = amplitudes(kin, u)
    k, q, G, Gp = kin["k"], kin["q"], kin["G"], kin["Gp"]
    if x <= 0:
        return (exp(1j * k * x) + B * exp(-1j * k * x),
                -G * exp(1j * k * x) + G * B * exp(-1j * k * x))
    if x <= u:
        return (C * exp(q * x) + D * exp(-q * x),
                1j * Gp * (C * exp(q * x) - D * exp(-q * x)))
    return (F * exp(1j * k * (x - u)), -G * F * exp(1j * k * (x - u)))


def rel_times_closed(e, u=U, mu=MU):
    kin = rel_kin(e, mu)
    F, _, _, _ = amplitudes(kin, u)
    t2 = abs(F) ** 2
    Q, K, xi, ep = kin["q"] * u, kin["k"] * u, kin["Xi"], kin["Ep"]
    s = sinh(2 * Q) / (2 * Q)
    td = t2 * u / (4 * Q * xi * ep) * (mu**2 * (1 + xi**2) * s
                                       + (3 * mu**2 - 2 * (1 - e) ** 2) * (1 - xi**2))
    ti = mu**2 * u * t2 * (1 + xi**2) * sinh(2 * Q) / (4 * K**2 * xi * e)
    return td, ti


def rel_dwell_quadrature(e, u=U, mu=MU):
    kf = lambda ee: rel_kin(ee, mu)
    g = kf(e)["G"]

    def dens(x):
        a, b = spinor13(kf, e, x, u)
        return abs(a) ** 2 - abs(b) ** 2

    return quad(dens, [0, u]) / (2 * g) / u


def rel_wide(e, u=U, mu=MU):
    kin = rel_kin(e, mu)
    xi = kin["Xi"]
    f = xi / (1 + xi**2)
    td = mu**2 * f / (kin["q"] ** 2 * kin["Ep"]) / u
    ti = 2 * mu**2 * f / (kin["k"] ** 2 * e) / u
    return td, ti


def nr_times_closed(e, u=U, mu=MU):
    kin = nr_kin(e, mu)
    F, _, _, _ = amplitudes(kin, u)
    t2 = abs(F) ** 2
    k, q = kin["k"], kin["q"]
    Q = q * u
    s = sinh(2 * Q) / (2 * Q)
    ti = mu * t2 * u / (2 * k) * (1 + q**2 / k**2) * s / u
    td = mu * t2 * u / (4 * k) * ((1 + k**2 / q**2) * s + (1 - k**2 / q**2)) / u
    return td, ti


def nr_dwell_quadrature(e, u=U, mu=MU):
    kf = lambda ee: nr_kin(ee, mu)
    k = kf(e)["k"]
    return mu / (2 * k) * quad(lambda x: abs(spinor13(kf, e, x, u)[0]) ** 2, [0, u]) / u


def sr_times(e, u=U, vr=MU):
    kin = sr_kin(e, vr)
    m, p, pp, xi = kin["m"], kin["k"], kin["q"], kin["Xi"]
    F, _, _, _ = amplitudes(kin, u)
    t2 = abs(F) ** 2
    P = pp * u
    s = sinh(2 * P) / (2 * P)
    b = (e - 1) / (2 * m)
    tdu = -(m * t2 * u / (2 * pp * xi)) * ((b - 1) * (1 + xi**2) * s + (b + 1) * (1 - xi**2)) / u
    ti = m * t2 * (1 + xi**2) * sinh(2 * P) / (4 * p**2 * xi) / u
    wdu = -2 * m * (b - 1) * xi / (pp**2 * (1 + xi**2)) / u
    wti = 2 * m * xi / (p**2 * (1 + xi**2)) / u
    return tdu, ti, wdu, wti


def sr_norm_quadrature(e, u=U, vr=MU):
    """Upsilon^4 * int phi_up^dag phi_up / (2 Gamma), the positive-density dwell."""
    kin = sr_kin(e, vr)
    g, gp, xi, pp = kin["G"], kin["Gp"], kin["Xi"], kin["q"]
    ups, upsp = sqrt(1 + g**2), sqrt(1 + gp**2)
    F, _, _, _ = amplitudes(kin, u)
    P = pp * u
    r = upsp / ups
    C = r / 2 * (1 - 1j * xi) * exp(P) * F
    Cp = r / 2 * (1 + 1j * xi) * exp(-P) * F

    def dens(x):
        a = (C * exp(-pp * x) + Cp * exp(pp * x)) / upsp
        b = 1j * gp * (C * exp(-pp * x) - Cp * exp(pp * x)) / upsp
        return abs(a) ** 2 + abs(b) ** 2

    return ups**2 * quad(dens, [0, u]) / (2 * g) / u


def phase_T(kinf, u):
    return lambda e: arg(amplitudes(kinf(e), u)[0])


def phase_R(kinf, u):
    return lambda e: arg(amplitudes(kinf(e), u)[1])


def composition(kinf, e, u):
    F, B, _, _ = amplitudes(kinf(e), u)
    return (abs(F) ** 2 * diff(phase_T(kinf, u), e)
            + abs(B) ** 2 * diff(phase_R(kinf, u), e)) / u


def sensitivity_sides(e, u=U, mu=MU):
    kf = lambda ee: rel_kin(ee, mu)

    def bracket(x):
        a, b = spinor13(kf, e, x, u)
        da = diff(lambda ee: spinor13(kf, ee, x, u)[0], e)
        db = diff(lambda ee: spinor13(kf, ee, x, u)[1], e)
        return conj(a) * db + conj(b) * da

    lhs = -1j * (bracket(u) - bracket(0))
    rhs = -quad(lambda x: abs(spinor13(kf, e, x, u)[0]) ** 2
                - abs(spinor13(kf, e, x, u)[1]) ** 2, [0, u])
    return lhs, rhs


def fmt(x):
    return mp.nstr(x, 20, min_fixed=-30, max_fixed=30)


def main():
    out = []
    emit = lambda name, val: out.append(f"inline constexpr double {name} = {fmt(val)};")

    half = mpf("0.5")
    kin = rel_kin(half)
    emit("kRelHalfKa", kin["k"] * U)
    emit("kRelHalfQa", kin["q"] * U)
    emit("kRelHalfXi", kin["Xi"])
    emit("kRelHalfEprime", kin["Ep"])
    F, B, C, D = amplitudes(kin, U)
    for nm, z in (("F", F), ("B", B), ("C", C), ("D", D)):
        emit(f"kRelHalf{nm}Re", z.real)
        emit(f"kRelHalf{nm}Im", z.imag)
    td_q = rel_dwell_quadrature(half)
    td_c, ti_c = rel_times_closed(half)
    emit("kRelHalfDwellQuadrature", td_q)
    emit("kRelHalfDwell", td_c)
    emit("kRelHalfSelfInterference", ti_c)
    # Self-interference cross-check: hbar Im(R) dGamma/dE / Gamma.
    g = kin["G"]
    ti_fd = im(B) * diff(lambda ee: rel_kin(ee)["G"], half) / g / U
    emit("kRelHalfSelfInterferenceFromGamma", ti_fd)
    wd, wi = rel_wide(half)
    emit("kRelHalfWideDwell", wd)
    emit("kRelHalfWideSelfInterference", wi)
    emit("kRelHalfComposition", composition(rel_kin, half, U))
    emit("kRelHalfPhaseDerivT", diff(phase_T(rel_kin, U), half))

    xi_one = findroot(lambda e: rel_kin(e)["Xi"] - 1, mpf("0.7"))
    emit("kRelXiOneEps", xi_one)
    emit("kRelXiOnePhaseDerivT", diff(phase_T(rel_kin, U), xi_one))

    for e in ("0.3", "0.5", "0.7"):
        lhs, rhs = sensitivity_sides(mpf(e))
        tag = e.replace("0.", "")
        emit(f"kSensitivityLhs{tag}", lhs.real)
        emit(f"kSensitivityRhs{tag}", rhs)

    e3 = mpf("0.3")
    td_c, ti_c = nr_times_closed(e3)
    emit("kNonRelDwell03", td_c)
    emit("kNonRelDwellQuadrature03", nr_dwell_quadrature(e3))
    emit("kNonRelSelfInterference03", ti_c)
    emit("kNonRelComposition03", composition(nr_kin, e3, U))
    emit("kNonRelHalfPhaseDerivT", diff(phase_T(nr_kin, U), half))

    tdu, ti, wdu, wti = sr_times(half)
    emit("kSuperHalfDwellUp", tdu)
    emit("kSuperHalfDwellUpQuadrature", sr_norm_quadrature(half))
    emit("kSuperHalfSelfInterference", ti)
    emit("kSuperHalfWideDwellUp", wdu)
    emit("kSuperHalfWideSelfInterference", wti)

    header = Path(__file__).with_name("reference_values.hpp")
    header.write_text(
        "// Generated by generate_reference.py (mpmath, 60 digits). Do not edit.\n"
        "#pragma once\n\nnamespace tunneling::reference {\n\n"
        "// Relativistic: u = 2*pi, mc^2/V0 = 0.98. Non-relativistic: same u and mass ratio.\n"
        "// Super-relativistic: u = 2*pi, V0/mc^2 = 0.98. Times are in units of a/c.\n\n"
        + "\n".join(out) + "\n\n}  // namespace tunneling::reference\n")


if __name__ == "__main__":
    main()
