#pragma once

// Energy sweeps and their CSV form.
//
// File layout: '#key=value' metadata lines, one header row, then rows of
// comma-separated values printed with 17 significant digits.

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <exception>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "tunneling/barrier.hpp"
#include "tunneling/errors.hpp"
#include "tunneling/times.hpp"
#include "tunneling/version.hpp"

namespace tunneling {

class CsvFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SweepRequest {
  Regime regime = Regime::Relativistic;
  double u = 2.0 * std::numbers::pi;
  double mu_ratio = 0.98;
  double eps_start = 0.05;
  double eps_end = 0.95;
  int eps_steps = 181;
  bool wide = false;
  double bprime_mag = 0.0;
  double bprime_phase = 0.0;
  std::string output_path;

  void validate() const {
    if (eps_steps < 2) throw ContractViolation("eps_steps must be at least 2");
    if (!(eps_start > 0.0 && eps_start < eps_end && eps_end < 1.0))
      throw ContractViolation("energy range must satisfy 0 < start < end < 1");
    if (!(u > 0.0) || !std::isfinite(u)) throw ContractViolation("barrier strength u must be positive");
    if (!(mu_ratio > 0.0) || !std::isfinite(mu_ratio)) throw ContractViolation("mass ratio must be positive");
    if (!(bprime_mag >= 0.0) || !std::isfinite(bprime_mag) || !std::isfinite(bprime_phase))
      throw ContractViolation("spin-down reflection amplitude must be finite with nonnegative magnitude");
    const auto [lo, hi] = admissible_window(regime, mu_ratio);
    if (!(eps_start > lo && eps_end < hi))
      throw ContractViolation("energy range leaves the admissible window (" + std::to_string(lo) + ", " +
                              std::to_string(hi) + ")");
  }

  complex bprime() const { return std::polar(bprime_mag, bprime_phase); }

  double eps_at(int n) const {
    if (n == eps_steps - 1) return eps_end;
    return eps_start + (eps_end - eps_start) * n / (eps_steps - 1);
  }

  BarrierSpec spec_at(int n) const { return {u, mu_ratio, eps_at(n), regime}; }
};

struct SweepResult {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

inline std::vector<std::string> sweep_columns(Regime regime) {
  if (regime == Regime::SuperRelativistic) return {"eps", "tau_g", "tau_g_up", "tau_d_up", "tau_d_down", "tau_i"};
  return {"eps", "tau_d", "tau_i", "tau_g"};
}

namespace detail {

inline std::vector<double> row_values(double eps, const AnyTimes& t) {
  if (const auto* s = std::get_if<SpinTimeSet>(&t))
    return {eps, s->tau_g, s->tau_g_up, s->tau_d_up, s->tau_d_down, s->tau_i};
  const auto& v = std::get<TimeSet>(t);
  return {eps, v.tau_d, v.tau_i, v.tau_g};
}

/// 17 significant digits, enough to read back the same double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Evaluates every row, spreading rows over `threads` workers (0 picks the
/// hardware concurrency). Rows come back in eps order.
inline SweepResult run_sweep(const SweepRequest& req, unsigned threads = 0) {
  req.validate();
  SweepResult out;
  out.columns = sweep_columns(req.regime);
  out.rows.resize(req.eps_steps);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(req.eps_steps));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const complex bprime = req.bprime();

  auto work = [&](unsigned id) {
    for (int n = static_cast<int>(id); n < req.eps_steps; n += static_cast<int>(threads)) {
      try {
        const BarrierSpec spec = req.spec_at(n);
        out.rows[n] = detail::row_values(spec.eps, evaluate_times(spec, req.wide, bprime));
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned id = 1; id < threads; ++id) pool.emplace_back(work, id);
  work(0);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);

  for (const auto& row : out.rows)
    for (double v : row)
      if (!std::isfinite(v)) throw OverflowGuard(std::numeric_limits<double>::infinity());

  out.metadata = {
      {"generator", "tunneling"},
      {"version", std::string(kVersion)},
      {"regime", std::string(to_string(req.regime))},
      {"u", detail::format_double(req.u)},
      {"mu", detail::format_double(req.mu_ratio)},
      {"eps", detail::format_double(req.eps_start) + ":" + detail::format_double(req.eps_end) + ":" +
                  std::to_string(req.eps_steps)},
      {"wide", req.wide ? "true" : "false"},
      {"time_unit", "a/c"},
  };
  if (req.regime == Regime::SuperRelativistic) {
    out.metadata.emplace_back("bprime_mag", detail::format_double(req.bprime_mag));
    out.metadata.emplace_back("bprime_phase", detail::format_double(req.bprime_phase));
  }
  return out;
}

inline std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Writes the CSV. The timestamp line is the only part that varies between
/// runs of the same request, and is left out when `reproducible` is set.
inline void write_csv(std::ostream& os, const SweepResult& r, bool reproducible) {
  for (const auto& [k, v] : r.metadata) os << '#' << k << '=' << v << '\n';
  if (!reproducible) os << "#timestamp=" << utc_timestamp() << '\n';
  for (std::size_t c = 0; c < r.columns.size(); ++c) os << (c ? "," : "") << r.columns[c];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << detail::format_double(row[c]);
    os << '\n';
  }
}

inline std::string to_csv(const SweepResult& r, bool reproducible) {
  std::ostringstream os;
  write_csv(os, r, reproducible);
  return os.str();
}

/// Returns false if the file cannot be opened or written.
inline bool write_csv_file(const std::string& path, const SweepResult& r, bool reproducible) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  write_csv(f, r, reproducible);
  f.flush();
  return static_cast<bool>(f);
}

namespace detail {

inline std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

inline double parse_double(std::string_view text, std::string_view what) {
  const std::string s(trim(text));
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || errno == ERANGE)
    throw ConfigError("cannot parse " + std::string(what) + " '" + s + "' as a number");
  return v;
}

}  // namespace detail

inline SweepResult read_csv(std::istream& is) {
  SweepResult r;
  std::string line;
  bool have_header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (have_header) throw CsvFormatError("metadata after header at line " + std::to_string(lineno));
      const auto eq = line.find('=');
      if (eq == std::string::npos) throw CsvFormatError("metadata line without '=' at line " + std::to_string(lineno));
      r.metadata.emplace_back(line.substr(1, eq - 1), line.substr(eq + 1));
      continue;
    }
    if (!have_header) {
      r.columns = detail::split(line, ',');
      have_header = true;
      continue;
    }
    const auto cells = detail::split(line, ',');
    if (cells.size() != r.columns.size())
      throw CsvFormatError("row at line " + std::to_string(lineno) + " has " + std::to_string(cells.size()) +
                           " cells, header has " + std::to_string(r.columns.size()));
    std::vector<double> row;
    row.reserve(cells.size());
    try {
      for (const auto& c : cells) row.push_back(detail::parse_double(c, "cell"));
    } catch (const ConfigError& e) {
      throw CsvFormatError(std::string(e.what()) + " at line " + std::to_string(lineno));
    }
    r.rows.push_back(std::move(row));
  }
  if (!have_header) throw CsvFormatError("no header row");
  return r;
}

inline std::string metadata_value(const SweepResult& r, std::string_view key) {
  for (const auto& [k, v] : r.metadata)
    if (k == key) return v;
  return {};
}

using ConfigMap = std::map<std::string, std::string>;

/// key=value lines; blank lines and lines starting with '#' are skipped.
inline ConfigMap parse_config(std::istream& is) {
  ConfigMap out;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto t = detail::trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("config line " + std::to_string(lineno) + " is not key=value");
    const std::string key(detail::trim(t.substr(0, eq)));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + " has an empty key");
    out[key] = std::string(detail::trim(t.substr(eq + 1)));
  }
  return out;
}

/// "start:end:steps".
inline void parse_eps_range(std::string_view text, SweepRequest& req) {
  const auto parts = detail::split(text, ':');
  if (parts.size() != 3) throw ConfigError("eps range must be start:end:steps");
  req.eps_start = detail::parse_double(parts[0], "eps start");
  req.eps_end = detail::parse_double(parts[1], "eps end");
  const double steps = detail::parse_double(parts[2], "eps steps");
  if (steps != std::floor(steps) || steps < 2 || steps > 1e7) throw ConfigError("eps steps must be an integer >= 2");
  req.eps_steps = static_cast<int>(steps);
}

inline bool parse_bool(std::string_view text) {
  const auto t = detail::trim(text);
  if (t == "true" || t == "1" || t == "yes") return true;
  if (t == "false" || t == "0" || t == "no") return false;
  throw ConfigError("expected a boolean, got '" + std::string(t) + "'");
}

/// Applies config entries to a request. Unknown keys are rejected. The
/// `reproducible` key is returned through the flag pointer when given.
inline void apply_config(const ConfigMap& cfg, SweepRequest& req, bool* reproducible = nullptr) {
  for (const auto& [key, value] : cfg) {
    if (key == "regime") {
      const auto r = parse_regime(value);
      if (!r) throw ConfigError("unknown regime '" + value + "'");
      req.regime = *r;
    } else if (key == "u") {
      req.u = detail::parse_double(value, "u");
    } else if (key == "mu") {
      req.mu_ratio = detail::parse_double(value, "mu");
    } else if (key == "eps") {
      parse_eps_range(value, req);
    } else if (key == "wide") {
      req.wide = parse_bool(value);
    } else if (key == "bprime_mag") {
      req.bprime_mag = detail::parse_double(value, "bprime_mag");
    } else if (key == "bprime_phase") {
      req.bprime_phase = detail::parse_double(value, "bprime_phase");
    } else if (key == "output") {
      req.output_path = value;
    } else if (key == "reproducible") {
      const bool b = parse_bool(value);
      if (reproducible) *reproducible = b;
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
}

enum class Figure { Fig2, Fig3, Fig4 };

inline std::optional<Figure> parse_figure(std::string_view s) {
  if (s == "fig2") return Figure::Fig2;
  if (s == "fig3") return Figure::Fig3;
  if (s == "fig4") return Figure::Fig4;
  return std::nullopt;
}

/// The wide-barrier sweeps behind the three figures: u = 2 pi, mass ratio
/// 0.98, eps from 0.05 to 0.95 in 181 points.
inline SweepRequest figure_request(Figure f) {
  SweepRequest r;
  r.u = 2.0 * std::numbers::pi;
  r.mu_ratio = 0.98;
  r.eps_start = 0.05;
  r.eps_end = 0.95;
  r.eps_steps = 181;
  r.wide = true;
  switch (f) {
    case Figure::Fig2: r.regime = Regime::Relativistic; break;
    case Figure::Fig3: r.regime = Regime::NonRelativistic; break;
    case Figure::Fig4: r.regime = Regime::SuperRelativistic; break;
  }
  return r;
}

}  // namespace tunneling
