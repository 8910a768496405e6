// Command-line front end: sweeps, verification and figure data.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad input, 3 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tunneling/tunneling.hpp"

namespace {

using namespace tunneling;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;
constexpr int kExitIO = 3;

struct SweepFlags {
  std::string regime;
  double u = 0.0;
  double mu = 0.0;
  std::string eps;
  bool wide = false;
  double bprime_mag = 0.0;
  double bprime_phase = 0.0;
  std::string output;
  std::string config;
  bool reproducible = false;

  CLI::Option* o_regime = nullptr;
  CLI::Option* o_u = nullptr;
  CLI::Option* o_mu = nullptr;
  CLI::Option* o_eps = nullptr;
  CLI::Option* o_wide = nullptr;
  CLI::Option* o_bmag = nullptr;
  CLI::Option* o_bphase = nullptr;
  CLI::Option* o_output = nullptr;
  CLI::Option* o_repro = nullptr;
};

void add_output_flags(CLI::App* cmd, SweepFlags& f) {
  f.o_output = cmd->add_option("--output", f.output, "CSV path (standard output if omitted)");
  cmd->add_option("--config", f.config, "key=value file; flags take precedence");
  f.o_repro = cmd->add_flag("--reproducible", f.reproducible, "omit the timestamp line");
}

void add_sweep_flags(CLI::App* cmd, SweepFlags& f) {
  f.o_regime = cmd->add_option("--regime", f.regime, "rel | nonrel | superrel");
  f.o_u = cmd->add_option("--u", f.u, "barrier strength V0 a / (hbar c)");
  f.o_mu = cmd->add_option("--mu", f.mu, "mc^2/V0 (rel, nonrel) or V0/mc^2 (superrel)");
  f.o_eps = cmd->add_option("--eps", f.eps, "start:end:steps");
  f.o_wide = cmd->add_flag("--wide", f.wide, "wide-barrier formulas");
  f.o_bmag = cmd->add_option("--bprime-mag", f.bprime_mag, "|B'| for the superrel spin-down channel");
  f.o_bphase = cmd->add_option("--bprime-phase", f.bprime_phase, "arg B' in radians");
  add_output_flags(cmd, f);
}

/// Config file first, then any flag given on the command line.
SweepRequest build_request(SweepRequest req, const SweepFlags& f, bool& reproducible) {
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw ConfigError("cannot open config file " + f.config);
    apply_config(parse_config(in), req, &reproducible);
  }
  if (f.o_regime && f.o_regime->count()) {
    const auto r = parse_regime(f.regime);
    if (!r) throw ConfigError("unknown regime '" + f.regime + "'");
    req.regime = *r;
  }
  if (f.o_u && f.o_u->count()) req.u = f.u;
  if (f.o_mu && f.o_mu->count()) req.mu_ratio = f.mu;
  if (f.o_eps && f.o_eps->count()) parse_eps_range(f.eps, req);
  if (f.o_wide && f.o_wide->count()) req.wide = f.wide;
  if (f.o_bmag && f.o_bmag->count()) req.bprime_mag = f.bprime_mag;
  if (f.o_bphase && f.o_bphase->count()) req.bprime_phase = f.bprime_phase;
  if (f.o_output->count()) req.output_path = f.output;
  if (f.o_repro->count()) reproducible = true;
  req.validate();
  return req;
}

int emit(const SweepRequest& req, bool reproducible) {
  const SweepResult r = run_sweep(req);
  if (req.output_path.empty()) {
    write_csv(std::cout, r, reproducible);
    return std::cout ? kExitOk : kExitIO;
  }
  if (!write_csv_file(req.output_path, r, reproducible)) {
    std::cerr << "error: cannot write " << req.output_path << '\n';
    return kExitIO;
  }
  std::cout << "wrote " << r.rows.size() << " rows (" << to_string(req.regime) << (req.wide ? ", wide" : "")
            << ") to " << req.output_path << '\n';
  return kExitOk;
}

int report(const std::vector<CheckResult>& results) {
  int failed = 0;
  for (const auto& r : results) {
    std::cout << format_check(r) << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << (failed ? "FAILED " : "OK ") << results.size() - failed << "/" << results.size() << " checks\n";
  return failed ? kExitVerify : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-equation tunneling times through a rectangular barrier"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "evaluate times along an energy grid and write CSV");
  add_sweep_flags(sweep, sweep_flags);

  std::string level = "fast";
  auto* verify_cmd = app.add_subcommand("verify", "run the named verification checks");
  verify_cmd->add_option("--level", level, "fast | full")->check(CLI::IsMember({"fast", "full"}));

  std::string which;
  SweepFlags figure_flags;
  auto* figure = app.add_subcommand("figure", "emit the wide-barrier sweep behind a figure");
  figure->add_option("which", which, "fig2 | fig3 | fig4")->required()->check(CLI::IsMember({"fig2", "fig3", "fig4"}));
  add_output_flags(figure, figure_flags);

  auto* selfcheck = app.add_subcommand("selfcheck", "run the representation algebra checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sweep) {
      bool reproducible = false;
      const SweepRequest req = build_request(SweepRequest{}, sweep_flags, reproducible);
      return emit(req, reproducible);
    }
    if (*figure) {
      bool reproducible = false;
      const SweepRequest base = figure_request(*parse_figure(which));
      SweepRequest req = build_request(base, figure_flags, reproducible);
      // Figure sweeps are fixed; only output and reproducibility come from outside.
      const std::string out = req.output_path;
      req = base;
      req.output_path = out;
      return emit(req, reproducible);
    }
    if (*verify_cmd) return report(run_verification(level == "full" ? VerifyLevel::Full : VerifyLevel::Fast));
    if (*selfcheck) return report({verify::algebra()});
  } catch (const std::exception& e) {
    // Everything thrown past parsing comes from the request itself (bad
    // ranges, windows, overflow guards); write failures return directly.
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
