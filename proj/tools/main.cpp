// Command-line front end: orchestrates scans, assembles bound reports and
// emits machine-readable CSV/JSON with sibling manifests.
//
// Exit codes: 0 success, 2 usage or domain error, 3 verification failure,
// 4 resource budget exceeded.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "splf/bounds.hpp"
#include "splf/dickman.hpp"
#include "splf/report.hpp"
#include "splf/shifted_stats.hpp"

namespace fs = std::filesystem;
using splf::u64;

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Writes `text` to --out (with a sibling manifest) or to stdout.
void emit(const std::string& text, const std::string& out, const std::string& command,
          const Params& params, Clock::time_point start) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  const fs::path path(out);
  {
    std::ofstream file(path, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot open output file " + out);
    file << text;
    if (!file) throw std::runtime_error("failed writing output file " + out);
  }
  splf::RunManifest manifest;
  manifest.command = command;
  manifest.parameters = params;
  manifest.wall_time_seconds = seconds_since(start);
  manifest.output_paths = {out};
  splf::write_manifest(manifest, path);
}

// Decimal in (0,1) with at most three places, kept as scaled/10^k.
struct Decimal {
  u64 scaled = 0;
  u64 den = 1;
};

Decimal parse_decimal(const std::string& text) {
  const auto dot = text.find('.');
  if (dot == std::string::npos)
    throw std::domain_error("expected a decimal in (0,1) such as 0.85, got '" + text + "'");
  const std::string whole = text.substr(0, dot);
  const std::string frac = text.substr(dot + 1);
  if (!whole.empty() && whole != "0")
    throw std::domain_error("grid values must lie strictly inside (0,1), got '" + text + "'");
  if (frac.empty() || frac.size() > 3)
    throw std::domain_error("grid decimals are limited to 3 places, got '" + text + "'");
  Decimal d;
  for (char ch : frac) {
    if (ch < '0' || ch > '9') throw std::domain_error("bad decimal '" + text + "'");
    d.scaled = d.scaled * 10 + static_cast<u64>(ch - '0');
    d.den *= 10;
  }
  return d;
}

// "start:stop:step" in decimals; stepping is exact over a common power-of-ten
// denominator, so grids never drift.
std::vector<splf::Exponent> parse_c_grid(const std::string& text) {
  const auto first = text.find(':');
  const auto second = text.find(':', first == std::string::npos ? first : first + 1);
  if (first == std::string::npos || second == std::string::npos)
    throw std::domain_error("--c-grid expects start:stop:step, got '" + text + "'");
  Decimal start = parse_decimal(text.substr(0, first));
  Decimal stop = parse_decimal(text.substr(first + 1, second - first - 1));
  Decimal step = parse_decimal(text.substr(second + 1));

  const u64 den = std::max({start.den, stop.den, step.den});
  start.scaled *= den / start.den;
  stop.scaled *= den / stop.den;
  step.scaled *= den / step.den;
  if (step.scaled == 0) throw std::domain_error("--c-grid step must be positive");
  if (start.scaled > stop.scaled) throw std::domain_error("--c-grid start exceeds stop");

  std::vector<splf::Exponent> grid;
  for (u64 v = start.scaled; v <= stop.scaled; v += step.scaled)
    grid.push_back(splf::Exponent::of(v, den));
  return grid;
}

std::optional<fs::path> cache_dir_from_env() {
  const char* env = std::getenv("SPL_CACHE_DIR");
  if (env == nullptr || *env == '\0') return std::nullopt;
  fs::path dir(env);
  std::error_code ec;
  fs::create_directories(dir, ec);  // best effort; a bad dir just disables reuse
  return dir;
}

splf::RhoSolver make_rho_solver(const std::vector<splf::Exponent>& grid) {
  double u_max = 20.0;
  for (const splf::Exponent& c : grid)
    u_max = std::max(u_max, std::ceil(1.0 / c.value()) + 1.0);
  splf::RhoSolver::Options options;
  options.u_max = u_max;
  return splf::RhoSolver(options);
}

constexpr u64 kDefaultXCap = u64(1) << 40;
constexpr u64 kLargeXCap = u64(1) << 62;

// ---------------------------------------------------------------- primes --

struct PrimesArgs {
  u64 limit = 0;
  bool list = false;
  std::string out;
};

void run_primes(const PrimesArgs& args) {
  const auto start = Clock::now();
  const splf::PrimeTable table = splf::primes_up_to(args.limit);
  std::ostringstream text;
  if (args.list) {
    text << "p\n";
    for (u64 p : table.primes) text << p << "\n";
  } else {
    text << "x,pi_x\n" << args.limit << "," << table.count() << "\n";
  }
  Params params{{"limit", std::to_string(args.limit)}, {"list", args.list ? "true" : "false"}};
  emit(text.str(), args.out, "primes", params, start);
}

// --------------------------------------------------------------- tc-scan --

struct TcScanArgs {
  u64 x = 0;
  std::string c_grid;
  std::string out;
  unsigned threads = 0;
  bool verify_pairs = false;
  bool allow_large = false;
};

void run_tc_scan(const TcScanArgs& args) {
  const auto start = Clock::now();
  const std::vector<splf::Exponent> grid = parse_c_grid(args.c_grid);

  splf::ScanOptions options;
  options.threads = args.threads;
  options.x_cap = args.allow_large ? kLargeXCap : kDefaultXCap;
  options.cache_dir = cache_dir_from_env();
  const splf::DensityScan scan = splf::scan_tc(args.x, grid, options);

  if (args.verify_pairs) {
    for (const splf::DensityRow& row : scan.rows) {
      if (2 * row.c.num < row.c.den) continue;  // identity needs c >= 1/2
      const u64 expected = splf::tprime_via_pairs(args.x, row.c, options.limits);
      if (expected != row.t_prime_c)
        throw splf::verification_error(
            "pair-sum oracle mismatch at x = " + std::to_string(args.x) + ", c = " +
            std::to_string(row.c.num) + "/" + std::to_string(row.c.den) + ": scan counted " +
            std::to_string(row.t_prime_c) + ", pair sum gives " + std::to_string(expected));
    }
  }

  const splf::RhoSolver solver = make_rho_solver(grid);
  std::ostringstream text;
  text << "x,c_num,c_den,t_c,t_prime_c,pi_x,ratio_t,ratio_t_prime,eh_prediction,"
          "theorem_bound,lemma2_gap_normalized\n";
  for (const splf::DensityRow& row : scan.rows) {
    text << scan.x << "," << row.c.num << "," << row.c.den << "," << row.t_c << ","
         << row.t_prime_c << "," << row.pi_x << "," << splf::format_real(row.ratio_t) << ","
         << splf::format_real(row.ratio_t_prime) << ","
         << splf::format_real(solver.eh_density(row.c.value())) << ","
         << splf::format_real(splf::theorem_bound(row.c)) << ","
         << splf::format_real(row.lemma2_gap_normalized) << "\n";
  }

  Params params{{"x", std::to_string(args.x)},
                {"c-grid", args.c_grid},
                {"threads", std::to_string(args.threads)},
                {"verify-pairs", args.verify_pairs ? "true" : "false"},
                {"allow-large", args.allow_large ? "true" : "false"}};
  emit(text.str(), args.out, "tc-scan", params, start);
}

// ----------------------------------------------------------------- pairs --

struct PairsArgs {
  std::vector<u64> hs;
  std::vector<u64> ys;
  u64 cutoff = 1'000'000;
  std::string out;
};

void run_pairs(const PairsArgs& args) {
  const auto start = Clock::now();
  const splf::SingularSeriesValue ss = splf::singular_series(args.cutoff);
  std::ostringstream text;
  text << "h,y,pair_count,pair_bound,count_over_bound\n";
  for (u64 h : args.hs) {
    for (u64 y : args.ys) {
      const u64 count = splf::prime_pair_count(h, y);
      const double bound = splf::pair_bound(h, static_cast<double>(y), ss);
      text << h << "," << y << "," << count << "," << splf::format_real(bound) << ","
           << splf::format_real(static_cast<double>(count) / bound) << "\n";
    }
  }
  std::ostringstream hs_echo, ys_echo;
  for (size_t i = 0; i < args.hs.size(); ++i) hs_echo << (i ? "," : "") << args.hs[i];
  for (size_t i = 0; i < args.ys.size(); ++i) ys_echo << (i ? "," : "") << args.ys[i];
  Params params{{"h", hs_echo.str()}, {"y", ys_echo.str()}, {"cutoff", std::to_string(args.cutoff)}};
  emit(text.str(), args.out, "pairs", params, start);
}

// --------------------------------------------------------------- dickman --

struct DickmanArgs {
  std::optional<double> u;
  std::optional<double> solve_target;
  bool table = false;
  double u_max = 20.0;
  double step = 1.0 / 1024;
  double tol = 1e-10;
  double table_step = 1.0 / 64;
  std::string out;
};

void run_dickman(const DickmanArgs& args) {
  const auto start = Clock::now();
  const int modes = (args.u ? 1 : 0) + (args.solve_target ? 1 : 0) + (args.table ? 1 : 0);
  if (modes != 1)
    throw std::domain_error("dickman: choose exactly one of --u, --solve-target, --table");

  splf::RhoSolver::Options options;
  options.u_max = args.u_max;
  options.step = args.step;
  options.tol = args.tol;
  if (args.u && *args.u > options.u_max) options.u_max = std::ceil(*args.u);
  const splf::RhoSolver solver(options);

  if (args.u) {
    std::cout << splf::format_real(solver.rho(*args.u)) << "\n";
    return;
  }
  if (args.solve_target) {
    std::cout << splf::format_real(solver.solve_eh_threshold(*args.solve_target)) << "\n";
    return;
  }
  if (!(args.table_step > 0)) throw std::domain_error("dickman: --table-step must be positive");
  std::ostringstream text;
  text << "u,rho\n";
  for (double u = 0.0; u <= solver.u_max() + 1e-12; u += args.table_step) {
    const double clamped = std::min(u, solver.u_max());
    text << splf::format_real(clamped) << "," << splf::format_real(solver.rho(clamped)) << "\n";
  }
  Params params{{"table", "true"},
                {"u-max", splf::format_real(args.u_max)},
                {"step", splf::format_real(args.step)},
                {"tol", splf::format_real(args.tol)},
                {"table-step", splf::format_real(args.table_step)}};
  emit(text.str(), args.out, "dickman", params, start);
}

// ------------------------------------------------------------- constants --

struct ConstantsArgs {
  u64 cutoff = 1'000'000;
  std::vector<double> sz;
  std::string out;
};

void run_constants(const ConstantsArgs& args) {
  const auto start = Clock::now();
  const splf::SingularSeriesValue ss = splf::singular_series(args.cutoff);
  std::ostringstream text;
  text << "singular_series = " << splf::format_real(ss.value) << " (cutoff " << ss.cutoff
       << ", tail_bound " << splf::format_real(ss.tail_bound) << ")\n";
  for (double z : args.sz) {
    text << "S(" << splf::format_real(z) << ") = " << splf::format_real(splf::s_of_z(z)) << "\n";
    if (z >= 10.0)
      text << "S_ratio(" << splf::format_real(z)
           << ") = " << splf::format_real(splf::s_asymptotic_ratio(z, ss)) << "\n";
  }
  std::ostringstream sz_echo;
  for (size_t i = 0; i < args.sz.size(); ++i) sz_echo << (i ? "," : "") << splf::format_real(args.sz[i]);
  Params params{{"cutoff", std::to_string(args.cutoff)}, {"sz", sz_echo.str()}};
  emit(text.str(), args.out, "constants", params, start);
}

// ---------------------------------------------------------- bound-report --

struct BoundReportArgs {
  u64 x = 0;
  std::vector<std::string> c_texts;
  bool with_sieve_rhs = false;
  bool json = false;
  bool strict = false;
  unsigned threads = 0;
  u64 cutoff = 1'000'000;
  bool allow_large = false;
  std::string out;
};

void run_bound_report(const BoundReportArgs& args) {
  const auto start = Clock::now();
  std::vector<splf::Exponent> grid;
  grid.reserve(args.c_texts.size());
  for (const std::string& text : args.c_texts) grid.push_back(splf::Exponent::parse(text));

  splf::ScanOptions options;
  options.threads = args.threads;
  options.x_cap = args.allow_large ? kLargeXCap : kDefaultXCap;
  options.cache_dir = cache_dir_from_env();
  const splf::DensityScan scan = splf::scan_tc(args.x, grid, options);
  const splf::SingularSeriesValue ss = splf::singular_series(args.cutoff);
  const splf::RhoSolver solver = make_rho_solver(grid);

  std::vector<splf::BoundReport> reports;
  for (const splf::DensityRow& row : scan.rows) {
    splf::BoundReport report;
    report.x = scan.x;
    report.c = row.c;
    report.empirical_ratio = row.ratio_t;
    report.eh_prediction = solver.eh_density(row.c.value());
    report.theorem_bound = splf::theorem_bound(row.c);
    report.closed_form_limit =
        16.0 * ss.value * splf::partial_summation_closed_form(row.c.value(), ss);
    if (args.with_sieve_rhs) {
      const double log_x = std::log(static_cast<double>(scan.x));
      report.sieve_rhs_normalized =
          splf::sieve_rhs(scan.x, row.c, ss) / (static_cast<double>(scan.x) / log_x);
    }
    if (report.theorem_bound > 1.0)
      std::cerr << "note: bound 8(1/c-1) = " << splf::format_real(report.theorem_bound)
                << " exceeds 1 at c = " << row.c.num << "/" << row.c.den
                << "; informative only for c >= 8/9\n";
    if (args.strict && 9 * row.c.num >= 8 * row.c.den &&
        report.empirical_ratio > report.theorem_bound)
      throw splf::verification_error(
          "strict mode: empirical ratio " + splf::format_real(report.empirical_ratio) +
          " exceeds bound " + splf::format_real(report.theorem_bound) + " at c = " +
          std::to_string(row.c.num) + "/" + std::to_string(row.c.den));
    reports.push_back(report);
  }

  std::ostringstream text;
  if (args.json) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const splf::BoundReport& r : reports) {
      nlohmann::ordered_json j;
      j["x"] = r.x;
      j["c_num"] = r.c.num;
      j["c_den"] = r.c.den;
      j["empirical_ratio"] = r.empirical_ratio;
      j["eh_prediction"] = r.eh_prediction;
      j["theorem_bound"] = r.theorem_bound;
      if (args.with_sieve_rhs) j["sieve_rhs_normalized"] = r.sieve_rhs_normalized;
      j["closed_form_limit"] = r.closed_form_limit;
      rows.push_back(j);
    }
    text << rows.dump(2) << "\n";
  } else {
    text << "x,c_num,c_den,empirical_ratio,eh_prediction,theorem_bound,sieve_rhs_normalized,"
            "closed_form_limit\n";
    for (const splf::BoundReport& r : reports) {
      text << r.x << "," << r.c.num << "," << r.c.den << "," << splf::format_real(r.empirical_ratio)
           << "," << splf::format_real(r.eh_prediction) << ","
           << splf::format_real(r.theorem_bound) << ",";
      if (args.with_sieve_rhs) text << splf::format_real(r.sieve_rhs_normalized);
      text << "," << splf::format_real(r.closed_form_limit) << "\n";
    }
  }

  std::ostringstream c_echo;
  for (size_t i = 0; i < args.c_texts.size(); ++i) c_echo << (i ? "," : "") << args.c_texts[i];
  Params params{{"x", std::to_string(args.x)},
                {"c", c_echo.str()},
                {"with-sieve-rhs", args.with_sieve_rhs ? "true" : "false"},
                {"json", args.json ? "true" : "false"},
                {"strict", args.strict ? "true" : "false"},
                {"threads", std::to_string(args.threads)},
                {"cutoff", std::to_string(args.cutoff)}};
  emit(text.str(), args.out, "bound-report", params, start);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"largest prime factors of shifted primes: sieve statistics and analytic bounds"};
  app.set_version_flag("--version", std::string(splf::kVersion));
  app.require_subcommand(1);

  PrimesArgs primes_args;
  auto* primes_cmd = app.add_subcommand("primes", "sieve primes and report pi(x)");
  primes_cmd->add_option("--limit", primes_args.limit, "sieve all primes <= limit")->required();
  primes_cmd->add_flag("--list", primes_args.list, "emit the primes, one per row");
  primes_cmd->add_option("--out", primes_args.out, "write CSV here plus a sibling manifest");

  TcScanArgs tc_args;
  auto* tc_cmd = app.add_subcommand("tc-scan", "count primes p <= x with P+(p-1) above p^c and x^c");
  tc_cmd->add_option("--x", tc_args.x, "scan limit")->required();
  tc_cmd->add_option("--c-grid", tc_args.c_grid, "exponent grid start:stop:step, decimals")
      ->required();
  tc_cmd->add_option("--out", tc_args.out, "write CSV here plus a sibling manifest");
  tc_cmd->add_option("--threads", tc_args.threads, "worker threads (0 = all cores)");
  tc_cmd->add_flag("--verify-pairs", tc_args.verify_pairs,
                   "re-derive t_prime_c from the prime-pair sum and fail on mismatch");
  tc_cmd->add_flag("--allow-large", tc_args.allow_large, "lift the default x cap of 2^40");

  PairsArgs pairs_args;
  auto* pairs_cmd = app.add_subcommand("pairs", "count primes q < y with qh+1 prime, with sieve bound");
  pairs_cmd->add_option("--h", pairs_args.hs, "even shift h (repeatable)")->required();
  pairs_cmd->add_option("--y", pairs_args.ys, "upper bound for q (repeatable)")->required();
  pairs_cmd->add_option("--cutoff", pairs_args.cutoff, "prime cutoff for the singular series");
  pairs_cmd->add_option("--out", pairs_args.out, "write CSV here plus a sibling manifest");

  DickmanArgs dickman_args;
  auto* dickman_cmd = app.add_subcommand("dickman", "evaluate Dickman's rho and its density inverse");
  double dickman_u = 0.0, dickman_target = 0.0;
  auto* u_opt = dickman_cmd->add_option("--u", dickman_u, "evaluate rho(u)");
  auto* target_opt =
      dickman_cmd->add_option("--solve-target", dickman_target, "solve 1 - rho(1/c) = target for c");
  dickman_cmd->add_flag("--table", dickman_args.table, "emit a u,rho CSV table");
  dickman_cmd->add_option("--u-max", dickman_args.u_max, "solver range (default 20)");
  dickman_cmd->add_option("--step", dickman_args.step, "grid step, must divide 1 (default 1/1024)");
  dickman_cmd->add_option("--tol", dickman_args.tol, "absolute error target (default 1e-10)");
  dickman_cmd->add_option("--table-step", dickman_args.table_step,
                          "row spacing for --table (default 1/64)");
  dickman_cmd->add_option("--out", dickman_args.out, "write the table here plus a sibling manifest");

  ConstantsArgs constants_args;
  auto* constants_cmd =
      app.add_subcommand("constants", "singular series and the weighted even-h sum S(z)");
  constants_cmd->add_option("--cutoff", constants_args.cutoff,
                            "prime cutoff for the singular series (default 10^6)");
  constants_cmd->add_option("--sz", constants_args.sz, "evaluate S(z) (repeatable)");
  constants_cmd->add_option("--out", constants_args.out, "write the report here plus a manifest");

  BoundReportArgs report_args;
  auto* report_cmd =
      app.add_subcommand("bound-report", "empirical ratio vs. prediction and bounds per exponent");
  report_cmd->add_option("--x", report_args.x, "scan limit")->required();
  report_cmd->add_option("--c", report_args.c_texts, "exponent, decimal or a/b (repeatable)")
      ->required();
  report_cmd->add_flag("--with-sieve-rhs", report_args.with_sieve_rhs,
                       "also evaluate the finite sieve sum, normalized by x/ln x");
  report_cmd->add_flag("--json", report_args.json, "emit JSON instead of CSV");
  report_cmd->add_flag("--strict", report_args.strict,
                       "fail (exit 3) if the empirical ratio exceeds the bound for c >= 8/9");
  report_cmd->add_option("--threads", report_args.threads, "worker threads (0 = all cores)");
  report_cmd->add_option("--cutoff", report_args.cutoff,
                         "prime cutoff for the singular series (default 10^6)");
  report_cmd->add_flag("--allow-large", report_args.allow_large, "lift the default x cap of 2^40");
  report_cmd->add_option("--out", report_args.out, "write here plus a sibling manifest");

  try {
    app.parse(argc, argv);
    if (u_opt->count() > 0) dickman_args.u = dickman_u;
    if (target_opt->count() > 0) dickman_args.solve_target = dickman_target;

    if (primes_cmd->parsed()) run_primes(primes_args);
    if (tc_cmd->parsed()) run_tc_scan(tc_args);
    if (pairs_cmd->parsed()) run_pairs(pairs_args);
    if (dickman_cmd->parsed()) run_dickman(dickman_args);
    if (constants_cmd->parsed()) run_constants(constants_args);
    if (report_cmd->parsed()) run_bound_report(report_args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const splf::budget_error& e) {
    std::cerr << "error (budget): " << e.what() << "\n";
    return 4;
  } catch (const splf::verification_error& e) {
    std::cerr << "error (verification): " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
