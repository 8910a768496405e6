// Times at the figure parameters for a few energies, finite and wide barrier.

#include <cstdio>

#include "tunneling/tunneling.hpp"

int main() {
  using namespace tunneling;
  std::printf("%-9s %-5s %12s %12s %12s\n", "regime", "eps", "tau_d", "tau_i", "tau_g");
  for (Regime r : {Regime::Relativistic, Regime::NonRelativistic}) {
    for (double eps : {0.25, 0.5, 0.75}) {
      const BarrierSpec s{2.0 * std::numbers::pi, 0.98, eps, r};
      const auto t = std::get<TimeSet>(evaluate_times(s, false));
      const auto w = std::get<TimeSet>(evaluate_times(s, true));
      std::printf("%-9s %-5.2f %12.6f %12.6f %12.6f\n", std::string(to_string(r)).c_str(), eps, t.tau_d, t.tau_i,
                  t.tau_g);
      std::printf("%-9s %-5s %12.6f %12.6f %12.6f\n", "  wide", "", w.tau_d, w.tau_i, w.tau_g);
    }
  }
  const BarrierSpec s{2.0 * std::numbers::pi, 0.98, 0.5, Regime::SuperRelativistic};
  const auto t = times_superrel(s, solve_superrel(s, plateau_matched_bprime(s)));
  std::printf("superrel  0.50  d_up=%.6f d_down=%.6f tau_i=%.6f tau_g=%.6f\n", t.tau_d_up, t.tau_d_down, t.tau_i,
              t.tau_g);
}
