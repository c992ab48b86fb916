// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Five subcommands: lambert, bounds, decide, sweep,
// simulate. SNR-valued inputs and outputs are in dB unless --linear is given.
// Exit codes: 0 success, 2 domain or usage error, 3 convergence failure.

#include <cmath>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "coopw/bounds.hpp"
#include "coopw/cooperation.hpp"
#include "coopw/errors.hpp"
#include "coopw/lambert.hpp"
#include "coopw/montecarlo.hpp"
#include "table.hpp"

namespace {

using coopw::cli::Cell;
using coopw::cli::OutputFormat;
using coopw::cli::Table;

enum class Scale { Linear, Log, Db };

Scale parse_scale(const std::string& name) {
  if (name == "linear") return Scale::Linear;
  if (name == "log") return Scale::Log;
  if (name == "db") return Scale::Db;
  throw coopw::DomainError("unknown scale: " + name);
}

// Grid in the sweep's own coordinates (dB values for Scale::Db).
std::vector<double> make_grid(double start, double stop, std::uint32_t points, Scale scale) {
  if (!(start < stop)) throw coopw::DomainError("sweep: requires start < stop");
  if (points < 2) throw coopw::DomainError("sweep: requires points >= 2");
  if (scale == Scale::Log && !(start > 0.0)) {
    throw coopw::DomainError("sweep: log scale requires start > 0");
  }
  std::vector<double> grid(points);
  const double lo = scale == Scale::Log ? std::log(start) : start;
  const double hi = scale == Scale::Log ? std::log(stop) : stop;
  for (std::uint32_t i = 0; i < points; ++i) {
    const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
    grid[i] = scale == Scale::Log ? std::exp(t) : t;
  }
  grid.front() = start;
  grid.back() = stop;
  return grid;
}

std::string snr_column(const std::string& base, bool linear) {
  return linear ? base : base + "_db";
}

// Convert a linear SNR to the output unit. SNRs are positive, so the dB
// conversion cannot fail.
Cell snr_cell(double linear_value, bool linear) {
  return linear ? Cell{linear_value} : Cell{coopw::linear_to_db(linear_value).db};
}

double input_to_linear(double value, bool linear) {
  return linear ? value : coopw::db_to_linear(coopw::Decibel{value});
}

void emit(const Table& table, const std::string& format) {
  table.emit(std::cout, coopw::cli::parse_format(format));
}

struct LambertArgs {
  double z = 0.0;
  std::string branch;
  coopw::EvalOptions options;
  std::string format = "text";
};

void run_lambert(const LambertArgs& args) {
  const auto branch = args.branch == "0" ? coopw::Branch::Principal : coopw::Branch::MinusOne;
  const coopw::WEvaluation eval = coopw::lambert_w(args.z, branch, args.options);
  Table table({"z", "branch", "value", "residual", "iterations"});
  table.add_row({eval.z, std::string("W") + (branch == coopw::Branch::Principal ? "0" : "-1"),
                 eval.value, eval.residual, static_cast<std::int64_t>(eval.iterations)});
  emit(table, args.format);
}

struct BoundsArgs {
  double u = 0.0;
  std::string format = "text";
};

Cell wm1_cell(double u) {
  try {
    return coopw::lambert_w(-std::exp(-1.0 - u), coopw::Branch::MinusOne).value;
  } catch (const coopw::DomainError&) {
    return std::monostate{};
  }
}

Cell barry_cell(double u) {
  try {
    return coopw::barry_approx(-std::exp(-1.0 - u));
  } catch (const coopw::DomainError&) {
    return std::monostate{};
  }
}

void run_bounds(const BoundsArgs& args) {
  if (!(args.u > 0.0)) throw coopw::DomainError("bounds: requires u > 0");
  const double u = args.u;
  const bool tightened = u < 1.0;
  std::vector<std::string> columns{"u", "lower_c1"};
  if (tightened) columns.push_back("lower_c34");
  columns.insert(columns.end(), {"wm1", "upper_c23", "barry_approx"});
  Table table(columns);
  std::vector<Cell> row{u, coopw::bound_family(u, coopw::kTightestLowerCoeff)};
  if (tightened) row.push_back(coopw::bound_family(u, coopw::kUnitIntervalLowerCoeff));
  row.push_back(wm1_cell(u));
  row.push_back(coopw::bound_family(u, coopw::kTightestUpperCoeff));
  row.push_back(barry_cell(u));
  table.add_row(std::move(row));
  emit(table, args.format);
}

struct DecideArgs {
  double theta = 0.0;
  double theta_prime = 0.0;
  double gamma = 0.0;
  bool linear = false;
  std::string format = "text";
};

void run_decide(const DecideArgs& args) {
  coopw::LinkBudget budget;
  budget.theta = input_to_linear(args.theta, args.linear);
  budget.theta_prime = input_to_linear(args.theta_prime, args.linear);
  budget.gamma_bar = input_to_linear(args.gamma, args.linear);
  const coopw::CooperationAssessment a = coopw::assess(budget);
  const double gamma_floor = coopw::min_gamma(budget.theta, budget.theta_prime);

  Table table({snr_column("theta", args.linear), snr_column("theta_prime", args.linear),
               snr_column("gamma_bar", args.linear), "verdict",
               snr_column("exact_threshold", args.linear),
               snr_column("safe_threshold", args.linear),
               snr_column("avoid_threshold", args.linear), "p_nc", "p_c",
               snr_column("min_gamma", args.linear), "bounded_regime"});
  table.add_row({snr_cell(budget.theta, args.linear), snr_cell(budget.theta_prime, args.linear),
                 snr_cell(budget.gamma_bar, args.linear), std::string(to_string(a.verdict)),
                 snr_cell(a.exact_threshold, args.linear), snr_cell(a.safe_threshold, args.linear),
                 a.avoid_threshold ? snr_cell(*a.avoid_threshold, args.linear)
                                   : Cell{std::monostate{}},
                 a.p_nc, a.p_c, snr_cell(gamma_floor, args.linear), a.bounded_regime});
  emit(table, args.format);
}

struct SweepArgs {
  std::string variable;
  double start = 0.0;
  double stop = 0.0;
  std::uint32_t points = 101;
  std::string scale;  // empty: pick a default for the variable
  std::optional<double> theta;
  std::optional<double> gamma;
  bool linear = false;
  std::string format = "text";
};

double require_fixed(const std::optional<double>& value, const char* flag) {
  if (!value) throw coopw::DomainError(std::string("sweep: requires ") + flag);
  return *value;
}

void sweep_region(const SweepArgs& args) {
  const bool over_gamma = args.variable == "gamma_bar";
  const double fixed_linear = input_to_linear(
      over_gamma ? require_fixed(args.theta, "--theta") : require_fixed(args.gamma, "--gamma"),
      args.linear);
  const Scale scale =
      args.scale.empty() ? (args.linear ? Scale::Linear : Scale::Db) : parse_scale(args.scale);
  if (scale == Scale::Db && args.linear) {
    throw coopw::DomainError("sweep: db scale conflicts with --linear");
  }
  const std::vector<double> grid = make_grid(args.start, args.stop, args.points, scale);

  Table table({snr_column(args.variable, args.linear),
               snr_column(over_gamma ? "theta" : "gamma_bar", args.linear),
               snr_column("exact_threshold", args.linear),
               snr_column("safe_threshold", args.linear),
               snr_column("avoid_threshold", args.linear)});
  for (const double point : grid) {
    const double value = scale == Scale::Db ? coopw::db_to_linear(coopw::Decibel{point}) : point;
    const double theta = over_gamma ? fixed_linear : value;
    const double gamma = over_gamma ? value : fixed_linear;
    Cell exact = std::monostate{};
    Cell avoid = std::monostate{};
    try {
      exact = snr_cell(coopw::exact_threshold(theta, gamma), args.linear);
    } catch (const coopw::DomainError&) {
    }
    try {
      avoid = snr_cell(coopw::avoid_threshold(theta, gamma), args.linear);
    } catch (const coopw::DomainError&) {
    }
    table.add_row({snr_cell(value, args.linear), snr_cell(fixed_linear, args.linear), exact,
                   snr_cell(coopw::safe_threshold(theta, gamma), args.linear), avoid});
  }
  emit(table, args.format);
}

void sweep_u(const SweepArgs& args) {
  const Scale scale = args.scale.empty() ? Scale::Log : parse_scale(args.scale);
  if (scale == Scale::Db) throw coopw::DomainError("sweep: db scale is for SNR variables");
  if (!(args.start > 0.0)) throw coopw::DomainError("sweep: u requires start > 0");
  const std::vector<double> grid = make_grid(args.start, args.stop, args.points, scale);

  Table table({"u", "lower_c1", "lower_c34", "wm1", "upper_c23", "barry_approx"});
  for (const double u : grid) {
    table.add_row({u, coopw::bound_family(u, coopw::kTightestLowerCoeff),
                   u < 1.0 ? Cell{coopw::bound_family(u, coopw::kUnitIntervalLowerCoeff)}
                           : Cell{std::monostate{}},
                   wm1_cell(u), coopw::bound_family(u, coopw::kTightestUpperCoeff),
                   barry_cell(u)});
  }
  emit(table, args.format);
}

void sweep_z(const SweepArgs& args) {
  const Scale scale = args.scale.empty() ? Scale::Linear : parse_scale(args.scale);
  if (scale == Scale::Db) throw coopw::DomainError("sweep: db scale is for SNR variables");
  const std::vector<double> grid = make_grid(args.start, args.stop, args.points, scale);

  Table table({"z", "w0", "wm1"});
  for (const double z : grid) {
    Cell principal = std::monostate{};
    Cell lower = std::monostate{};
    try {
      principal = coopw::lambert_w(z, coopw::Branch::Principal).value;
    } catch (const coopw::DomainError&) {
    }
    try {
      lower = coopw::lambert_w(z, coopw::Branch::MinusOne).value;
    } catch (const coopw::DomainError&) {
    }
    table.add_row({z, principal, lower});
  }
  emit(table, args.format);
}

void run_sweep(const SweepArgs& args) {
  if (args.variable == "gamma_bar" || args.variable == "theta") {
    sweep_region(args);
  } else if (args.variable == "u") {
    sweep_u(args);
  } else {
    sweep_z(args);
  }
}

struct SimulateArgs {
  std::string mode;
  double threshold = 0.0;
  double gamma = 0.0;
  std::uint64_t n_trials = 1000000;
  std::uint64_t seed = 0;
  int threads = 1;
  bool linear = false;
  std::string format = "text";
};

void run_simulate(const SimulateArgs& args) {
  coopw::SimSpec spec;
  spec.n_trials = args.n_trials;
  spec.seed = args.seed;
  spec.gamma_bar = input_to_linear(args.gamma, args.linear);
  spec.threshold = input_to_linear(args.threshold, args.linear);
  spec.mode = args.mode == "noncoop" ? coopw::FadingMode::NonCooperative
                                     : coopw::FadingMode::Cooperative;
  const coopw::SimResult result = coopw::simulate(spec, args.threads);
  const double analytic = spec.mode == coopw::FadingMode::NonCooperative
                              ? coopw::outage_noncoop(spec.threshold, spec.gamma_bar)
                              : coopw::outage_coop(spec.threshold, spec.gamma_bar);

  Table table({"mode", snr_column("threshold", args.linear), snr_column("gamma_bar", args.linear),
               "n_trials", "seed", "outage_count", "estimate", "std_error", "analytic",
               "z_score"});
  // std_error 0 (all trials agreed) leaves the z-score undefined; emit blanks.
  const bool resolved = result.std_error > 0.0;
  table.add_row({std::string(args.mode), snr_cell(spec.threshold, args.linear),
                 snr_cell(spec.gamma_bar, args.linear), result.n_trials, args.seed,
                 result.outage_count, result.estimate,
                 resolved ? Cell{result.std_error} : Cell{std::monostate{}}, analytic,
                 resolved ? Cell{(result.estimate - analytic) / result.std_error}
                          : Cell{std::monostate{}}});
  emit(table, args.format);
}

void add_format_flag(CLI::App* sub, std::string& format) {
  sub->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambert W evaluation, closed-form bounds, and decode-and-forward "
               "cooperation decisions under Rayleigh fading"};
  app.require_subcommand(1);

  LambertArgs lambert;
  auto* lambert_cmd =
      app.add_subcommand("lambert", "Evaluate a real branch of W(z) with a residual certificate");
  lambert_cmd->add_option("--z", lambert.z, "Argument z")->required();
  lambert_cmd->add_option("--branch", lambert.branch, "Branch: 0 (principal) or m1 (lower)")
      ->required()
      ->check(CLI::IsMember({"0", "m1"}));
  lambert_cmd->add_option("--rel-tolerance", lambert.options.rel_tolerance,
                          "Residual certificate |W e^W - z| <= rel-tolerance * max(|z|, abs-floor)");
  lambert_cmd->add_option("--abs-floor", lambert.options.abs_floor,
                          "Scale floor for the residual certificate");
  lambert_cmd->add_option("--max-iterations", lambert.options.max_iterations,
                          "Iteration budget before reporting a convergence failure");
  lambert_cmd->add_option("--branch-point-window", lambert.options.branch_point_window,
                          "Half-width of e*z+1 window evaluated by series instead of iteration");
  add_format_flag(lambert_cmd, lambert.format);

  BoundsArgs bounds;
  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Closed-form enclosure of W_-1(-e^{-u-1}) with the approximation column");
  bounds_cmd->add_option("--u", bounds.u, "Exponent offset u > 0")->required();
  add_format_flag(bounds_cmd, bounds.format);

  DecideArgs decide;
  auto* decide_cmd =
      app.add_subcommand("decide", "Classify whether cooperation beats direct transmission");
  decide_cmd->add_option("--theta", decide.theta, "Direct-mode decoding threshold")->required();
  decide_cmd->add_option("--theta-prime", decide.theta_prime, "Cooperative decoding threshold")
      ->required();
  decide_cmd->add_option("--gamma", decide.gamma, "Mean uplink SNR")->required();
  decide_cmd->add_flag("--linear", decide.linear, "SNRs are linear instead of dB");
  add_format_flag(decide_cmd, decide.format);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate a quantity over a grid");
  sweep_cmd->add_option("--variable", sweep.variable, "Swept variable")
      ->required()
      ->check(CLI::IsMember({"gamma_bar", "theta", "u", "z"}));
  sweep_cmd->add_option("--start", sweep.start, "Grid start (inclusive)")->required();
  sweep_cmd->add_option("--stop", sweep.stop, "Grid stop (inclusive)")->required();
  sweep_cmd->add_option("--points", sweep.points, "Grid size (>= 2)");
  sweep_cmd->add_option("--scale", sweep.scale, "Grid spacing (default: db for SNRs, log for u, linear for z)")
      ->check(CLI::IsMember({"linear", "log", "db"}));
  sweep_cmd->add_option("--theta", sweep.theta, "Fixed direct threshold (gamma_bar sweeps)");
  sweep_cmd->add_option("--gamma", sweep.gamma, "Fixed mean uplink SNR (theta sweeps)");
  sweep_cmd->add_flag("--linear", sweep.linear, "SNRs are linear instead of dB");
  add_format_flag(sweep_cmd, sweep.format);

  SimulateArgs simulate;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo outage estimate under Rayleigh fading");
  simulate_cmd->add_option("--mode", simulate.mode, "noncoop | coop")
      ->required()
      ->check(CLI::IsMember({"noncoop", "coop"}));
  simulate_cmd->add_option("--threshold", simulate.threshold, "Decoding threshold")->required();
  simulate_cmd->add_option("--gamma", simulate.gamma, "Mean uplink SNR")->required();
  simulate_cmd->add_option("--n", simulate.n_trials, "Number of trials");
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed");
  simulate_cmd->add_option("--threads", simulate.threads, "Worker threads");
  simulate_cmd->add_flag("--linear", simulate.linear, "SNRs are linear instead of dB");
  add_format_flag(simulate_cmd, simulate.format);

  try {
    app.parse(argc, argv);
    if (lambert_cmd->parsed()) run_lambert(lambert);
    if (bounds_cmd->parsed()) run_bounds(bounds);
    if (decide_cmd->parsed()) run_decide(decide);
    if (sweep_cmd->parsed()) run_sweep(sweep);
    if (simulate_cmd->parsed()) run_simulate(simulate);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const coopw::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const coopw::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
