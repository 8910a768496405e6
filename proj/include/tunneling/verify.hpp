#pragma once

// Named verification checks shared by the CLI `verify` command and the
// acceptance binary. Each check reports its worst residual against a fixed
// tolerance.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "tunneling/algebra.hpp"
#include "tunneling/barrier.hpp"
#include "tunneling/oracles.hpp"
#include "tunneling/scattering.hpp"
#include "tunneling/sweep.hpp"
#include "tunneling/times.hpp"

namespace tunneling {

enum class VerifyLevel { Fast, Full };

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double tolerance = 0.0;
  std::string detail;
  double seconds = 0.0;
};

namespace verify {

/// Figure parameters: u = 2 pi, mass ratio 0.98.
inline BarrierSpec figure_spec(Regime regime, double eps) {
  return {2.0 * std::numbers::pi, 0.98, eps, regime};
}

/// eps = 0.05, 0.15, ..., 0.95.
inline std::vector<double> coarse_grid() {
  std::vector<double> g;
  for (int n = 0; n < 10; ++n) g.push_back(0.05 + 0.1 * n);
  return g;
}

/// 181 points from 0.05 to 0.95.
inline std::vector<double> fine_grid() {
  std::vector<double> g;
  for (int n = 0; n < 181; ++n) g.push_back(0.05 + 0.005 * n);
  return g;
}

inline double rel_diff(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }
inline double rel_diff(complex a, complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline CheckResult finish(std::string name, double value, double tol, std::string detail = {}) {
  return {std::move(name), value < tol, value, tol, std::move(detail), 0.0};
}

inline CheckResult algebra() {
  double worst = 0.0;
  std::string where;
  for (const auto& rep : {make_standard_representation(), make_alternative_representation()}) {
    const auto report = check_representation(rep);
    for (const auto& r : report.residuals)
      if (r.value >= worst) {
        worst = r.value;
        where = r.name;
      }
  }
  return finish("algebra", worst, 1e-12, "worst: " + where);
}

inline CheckResult unitarity(Regime regime = Regime::Relativistic) {
  double worst = 0.0;
  for (double eps : fine_grid()) {
    const BarrierSpec s = figure_spec(regime, eps);
    double total = 0.0;
    if (regime == Regime::SuperRelativistic) {
      total = solve_superrel(s).total_probability();
    } else {
      const auto c = solve_relativistic(s);
      total = c.mag2_T + c.mag2_R;
    }
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return finish("unitarity_" + std::string(to_string(regime)), worst, 1e-10, "181 points");
}

inline double coefficient_mismatch(const CoefficientSet& a, const CoefficientSet& b) {
  return std::max({rel_diff(a.B, b.B), rel_diff(a.C, b.C), rel_diff(a.D, b.D), rel_diff(a.F, b.F)});
}

/// Closed-form amplitudes against the dense boundary-condition solve on 50
/// seeded random specs.
inline CheckResult matching(Regime regime, std::uint64_t seed = kOracleSeed) {
  std::mt19937_64 rng(seed);
  double worst = 0.0;
  std::size_t zero_down = 0;
  for (int n = 0; n < 50; ++n) {
    const BarrierSpec s = random_admissible_spec(regime, rng);
    if (regime == Regime::SuperRelativistic) {
      const auto direct = matching_solve_spin(s);
      const auto closed = solve_superrel(s);
      const auto& d = direct.coeffs;
      worst = std::max({worst, rel_diff(d.Aprime, closed.Aprime), rel_diff(d.C, closed.C),
                        rel_diff(d.Cprime, closed.Cprime), rel_diff(d.F, closed.F)});
      if (direct.spin_down_rank == 4) ++zero_down;
    } else {
      worst = std::max(worst, coefficient_mismatch(matching_solve(s), solve_relativistic(s)));
    }
  }
  std::string detail = "50 specs, seed " + std::to_string(seed);
  if (regime == Regime::SuperRelativistic)
    detail += ", spin-down block full rank in " + std::to_string(zero_down) + "/50";
  return finish("matching_" + std::string(to_string(regime)), worst, 1e-10, detail);
}

inline CheckResult sensitivity() {
  double worst = 0.0;
  std::ostringstream os;
  for (double eps : {0.3, 0.5, 0.7}) {
    const auto sides = sensitivity_sides(figure_spec(Regime::Relativistic, eps));
    worst = std::max(worst, sides.residual);
    os << "eps=" << eps << " lhs=" << sides.lhs.real() << (sides.lhs.imag() < 0 ? "" : "+") << sides.lhs.imag()
       << "i rhs=" << sides.rhs << "; ";
  }
  return finish("sensitivity_relation", worst, 1e-5, os.str());
}

/// Closed-form dwell time against quadrature of the barrier density.
inline CheckResult dwell(Regime regime) {
  double worst = 0.0;
  for (double eps : coarse_grid()) {
    const BarrierSpec s = figure_spec(regime, eps);
    const double closed = regime == Regime::SuperRelativistic
                              ? times_superrel(s, solve_superrel(s)).tau_d_up
                              : std::get<TimeSet>(evaluate_times(s, false)).tau_d;
    worst = std::max(worst, rel_diff(dwell_integral(s), closed));
  }
  return finish("dwell_" + std::string(to_string(regime)), worst, 1e-8, "10 points");
}

/// Closed-form tau_g against the finite-difference phase-time composition.
inline CheckResult group_time(Regime regime) {
  double worst = 0.0;
  double worst_eps = 0.0;
  double worst_closed = 0.0;
  double worst_fd = 0.0;
  for (double eps : coarse_grid()) {
    const BarrierSpec s = figure_spec(regime, eps);
    const double closed = regime == Regime::SuperRelativistic ? times_superrel(s, solve_superrel(s)).tau_g_up
                                                              : std::get<TimeSet>(evaluate_times(s, false)).tau_g;
    const double fd = group_time_fd(s);
    const double d = rel_diff(fd, closed);
    if (d >= worst) {
      worst = d;
      worst_eps = eps;
      worst_closed = closed;
      worst_fd = fd;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "worst at eps=%.2f: closed=%.6g fd=%.6g", worst_eps, worst_closed, worst_fd);
  return finish("group_time_" + std::string(to_string(regime)), worst, 1e-4, buf);
}

/// Finite-barrier times at u = 40 pi against the wide-barrier plateau, eps = 0.5.
/// In the super-relativistic regime the spin-down channel uses the
/// plateau-matched B'.
inline CheckResult hartman(Regime regime) {
  const BarrierSpec base = figure_spec(regime, 0.5);
  const BarrierSpec wide_spec = base.with_u(40.0 * std::numbers::pi);
  const complex bprime = regime == Regime::SuperRelativistic ? complex(plateau_matched_bprime(base)) : complex{};
  const std::array<double, 1> widths{wide_spec.u};
  const auto scan = hartman_scan(base, widths, bprime);
  const AnyTimes finite = scan.back().times;
  const AnyTimes plateau = evaluate_times(wide_spec, true);
  double worst = 0.0;
  if (regime == Regime::SuperRelativistic) {
    const auto& f = std::get<SpinTimeSet>(finite);
    const auto& w = std::get<SpinTimeSet>(plateau);
    worst = std::max({rel_diff(f.tau_d_up, w.tau_d_up), rel_diff(f.tau_d_down, w.tau_d_down),
                      rel_diff(f.tau_i, w.tau_i), rel_diff(f.tau_g, w.tau_g), rel_diff(f.tau_g_up, w.tau_g_up)});
  } else {
    const auto& f = std::get<TimeSet>(finite);
    const auto& w = std::get<TimeSet>(plateau);
    worst = std::max({rel_diff(f.tau_d, w.tau_d), rel_diff(f.tau_i, w.tau_i), rel_diff(f.tau_g, w.tau_g)});
  }
  return finish("hartman_" + std::string(to_string(regime)), worst, 1e-6, "eps=0.5, u=40pi");
}

/// Spin-up channel only with B' = 0: the spin-down dwell time is then zero at
/// every width, so only the spin-up quantities can saturate.
inline CheckResult hartman_spin_up() {
  const BarrierSpec s = figure_spec(Regime::SuperRelativistic, 0.5).with_u(40.0 * std::numbers::pi);
  const auto f = times_superrel(s, solve_superrel(s));
  const auto w = times_superrel_wide(s);
  const double worst = std::max({rel_diff(f.tau_d_up, w.tau_d_up), rel_diff(f.tau_i, w.tau_i),
                                 rel_diff(f.tau_g_up, w.tau_g_up)});
  return finish("hartman_superrel_spin_up", worst, 1e-6, "B'=0, eps=0.5, u=40pi");
}

/// tau_g = sum of parts on every sweep row (finite and wide, all regimes) and
/// tau_d_up == tau_d_down exactly on the wide super-relativistic rows.
inline CheckResult decomposition() {
  double worst = 0.0;
  bool wide_spins_equal = true;
  for (Regime r : {Regime::Relativistic, Regime::NonRelativistic, Regime::SuperRelativistic})
    for (bool wide : {false, true}) {
      for (double eps : fine_grid()) {
        const BarrierSpec s = figure_spec(r, eps);
        const complex bprime = r == Regime::SuperRelativistic ? complex(plateau_matched_bprime(s)) : complex{};
        const AnyTimes t = evaluate_times(s, wide, bprime);
        worst = std::max(worst, decomposition_residual(t));
        if (wide && r == Regime::SuperRelativistic) {
          const auto& st = std::get<SpinTimeSet>(t);
          wide_spins_equal = wide_spins_equal && st.tau_d_up == st.tau_d_down;
        }
      }
    }
  CheckResult c = finish("decomposition", worst, 1e-12, wide_spins_equal ? "wide spin dwell equal" : "wide spin dwell differ");
  c.passed = c.passed && wide_spins_equal;
  return c;
}

/// Flux sampled across all three regions against its region-III value.
inline CheckResult current_conservation() {
  double worst = 0.0;
  for (double eps : coarse_grid())
    worst = std::max(worst, current_audit(solve_relativistic(figure_spec(Regime::Relativistic, eps)), 64));
  return finish("current_conservation_rel", worst, 1e-9, "64 samples per region");
}

/// Same audit in every regime, with deviations measured against the incident
/// flux instead of the transmitted one. Deep tunnelling makes the transmitted
/// flux tiny, so the relative audit there only sees roundoff over |T|^2.
inline CheckResult flux_balance() {
  double worst = 0.0;
  for (double eps : coarse_grid()) {
    const auto r = solve_relativistic(figure_spec(Regime::Relativistic, eps));
    const auto n = solve_relativistic(figure_spec(Regime::NonRelativistic, eps));
    const auto s = solve_superrel(figure_spec(Regime::SuperRelativistic, eps));
    worst = std::max({worst, current_audit(r, 64) * r.mag2_T, current_audit(n, 64) * n.mag2_T,
                      current_audit(s, 64) * s.mag2_T});
  }
  return finish("flux_balance", worst, 1e-12, "deviation over incident flux");
}

inline std::size_t column_index(const SweepResult& r, const std::string& name) {
  const auto it = std::find(r.columns.begin(), r.columns.end(), name);
  if (it == r.columns.end()) throw CsvFormatError("missing column " + name);
  return static_cast<std::size_t>(it - r.columns.begin());
}

inline double argmin_eps(const SweepResult& r) {
  const std::size_t g = column_index(r, "tau_g");
  std::size_t best = 0;
  for (std::size_t n = 1; n < r.rows.size(); ++n)
    if (r.rows[n][g] < r.rows[best][g]) best = n;
  return r.rows[best][0];
}

/// Figure CSVs: round trip, row-wise decomposition, tau_g >= tau_d where
/// tau_i >= 0, tau_g increasing over the top 20% of the fig2 grid, and the
/// fig3 minimum to the right of the fig2 minimum.
inline CheckResult figures() {
  std::vector<SweepResult> figs;
  std::vector<std::string> problems;
  double worst_decomp = 0.0;
  for (Figure f : {Figure::Fig2, Figure::Fig3, Figure::Fig4}) {
    const SweepResult r = run_sweep(figure_request(f));
    std::istringstream is(to_csv(r, true));
    const SweepResult back = read_csv(is);
    if (back.rows != r.rows || back.columns != r.columns) problems.push_back("round trip");
    const std::size_t g = column_index(back, "tau_g");
    const std::size_t i = column_index(back, "tau_i");
    for (const auto& row : back.rows) {
      if (f == Figure::Fig4) {
        const double parts = row[column_index(back, "tau_d_up")] + row[column_index(back, "tau_d_down")] + row[i];
        worst_decomp = std::max(worst_decomp, rel_diff(parts, row[g]));
        if (row[i] >= 0 && row[g] < row[column_index(back, "tau_d_up")]) problems.push_back("tau_g < tau_d_up");
      } else {
        const std::size_t d = column_index(back, "tau_d");
        worst_decomp = std::max(worst_decomp, rel_diff(row[d] + row[i], row[g]));
        if (row[i] >= 0 && row[g] < row[d]) problems.push_back("tau_g < tau_d");
      }
    }
    figs.push_back(back);
  }
  const auto& fig2 = figs[0];
  const std::size_t g2 = column_index(fig2, "tau_g");
  const std::size_t top = fig2.rows.size() * 4 / 5;
  for (std::size_t n = top + 1; n < fig2.rows.size(); ++n)
    if (!(fig2.rows[n][g2] > fig2.rows[n - 1][g2])) {
      problems.push_back("fig2 tau_g not increasing near eps=1");
      break;
    }
  const double min2 = argmin_eps(fig2);
  const double min3 = argmin_eps(figs[1]);
  if (!(min3 > min2)) problems.push_back("fig3 minimum not right of fig2 minimum");
  if (worst_decomp >= 1e-12) problems.push_back("decomposition");

  char buf[160];
  std::snprintf(buf, sizeof buf, "fig2 min at eps=%.3f, fig3 min at eps=%.3f", min2, min3);
  std::string detail = buf;
  for (const auto& p : problems) detail += "; " + p;
  CheckResult c = finish("figure_data", worst_decomp, 1e-12, detail);
  c.passed = problems.empty();
  return c;
}

}  // namespace verify

/// Runs the checks for a level. Fast covers algebra, unitarity, current
/// conservation and the decomposition identities; full adds the oracle
/// batches, Hartman scans and figure data.
inline std::vector<CheckResult> run_verification(VerifyLevel level) {
  std::vector<std::function<CheckResult()>> checks = {
      [] { return verify::algebra(); },
      [] { return verify::unitarity(Regime::Relativistic); },
      [] { return verify::unitarity(Regime::NonRelativistic); },
      [] { return verify::unitarity(Regime::SuperRelativistic); },
      [] { return verify::current_conservation(); },
      [] { return verify::flux_balance(); },
      [] { return verify::decomposition(); },
  };
  if (level == VerifyLevel::Full) {
    for (Regime r : {Regime::Relativistic, Regime::NonRelativistic, Regime::SuperRelativistic}) {
      checks.push_back([r] { return verify::matching(r); });
      checks.push_back([r] { return verify::dwell(r); });
      checks.push_back([r] { return verify::group_time(r); });
      checks.push_back([r] { return verify::hartman(r); });
    }
    checks.push_back([] { return verify::hartman_spin_up(); });
    checks.push_back([] { return verify::sensitivity(); });
    checks.push_back([] { return verify::figures(); });
  }
  std::vector<CheckResult> out;
  for (const auto& check : checks) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = check();
    } catch (const std::exception& e) {
      r.name = "exception";
      r.passed = false;
      r.detail = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(std::move(r));
  }
  return out;
}

inline std::string format_check(const CheckResult& r) {
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-4s %-28s value=%-12.4g tol=%-8.1g %7.3fs  %s", r.passed ? "PASS" : "FAIL",
                r.name.c_str(), r.value, r.tolerance, r.seconds, r.detail.c_str());
  return buf;
}

}  // namespace tunneling
