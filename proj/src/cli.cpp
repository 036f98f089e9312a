// SPDX-License-Identifier: Apache-2.0

#include "agsq/cli.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "agsq/baseline.hpp"
#include "agsq/experiments.hpp"
#include "agsq/simulator.hpp"

namespace agsq {

namespace {

// Writes either to --out or to stdout.
void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) {
    throw io_error("cannot write " + out_path);
  }
  out << payload;
  if (!out.flush()) {
    throw io_error("failed writing " + out_path);
  }
}

struct CommonFlags {
  int n_qubits = 2;
  std::uint64_t marked = 0;
  int steps = 1;
  std::string variant = "exact";
  double eps1 = 0.1;
  std::string format;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonFlags& flags, const std::string& default_format) {
  flags.format = default_format;
  cmd->add_option("--n-qubits", flags.n_qubits, "number of qubits (N = 2^n)");
  cmd->add_option("--marked", flags.marked, "marked basis-state index");
  cmd->add_option("--steps", flags.steps, "step count R");
  cmd->add_option("--variant", flags.variant, "schedule variant: paper|regularized|exact");
  cmd->add_option("--eps1", flags.eps1, "adiabatic accuracy parameter");
  cmd->add_option("--format", flags.format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", flags.out_path, "output path (default: stdout)");
}

int run_schedule(const CommonFlags& flags) {
  const SearchInstance instance(flags.n_qubits, flags.marked);
  const ScheduleSpec spec{variant_from_string(flags.variant), flags.steps, flags.eps1};
  const Schedule schedule = schedule_discrete(spec, instance.size_as_double());
  const QaoaParams params = synth_qaoa_params(schedule);
  if (schedule.out_of_range) {
    std::cerr << "warning: schedule has s values outside [0, 1]\n";
  }
  if (flags.format == "json") {
    emit(flags.out_path, to_json(schedule, params).dump(2) + "\n");
  } else {
    std::ostringstream os;
    write_schedule_csv(os, schedule, params);
    emit(flags.out_path, os.str());
  }
  return 0;
}

int run_simulate(const CommonFlags& flags, const std::string& backend_name,
                 const std::vector<double>& gamma, const std::vector<double>& beta,
                 bool record_trace) {
  const SearchInstance instance(flags.n_qubits, flags.marked);
  QaoaParams params;
  if (!gamma.empty() || !beta.empty()) {
    params.gamma = gamma;
    params.beta = beta;
  } else {
    const ScheduleSpec spec{variant_from_string(flags.variant), flags.steps, flags.eps1};
    params = synth_qaoa_params(schedule_discrete(spec, instance.size_as_double()));
  }
  RunOptions options;
  options.record_trace = record_trace;
  const RunResult result =
      run_qaoa(instance, params, backend_from_string(backend_name), options);
  if (flags.format == "csv") {
    std::ostringstream os;
    if (std::holds_alternative<StateVector>(result.state)) {
      write_state_csv(os, std::get<StateVector>(result.state));
    } else {
      write_state_csv(os, std::get<SubspaceState>(result.state));
    }
    emit(flags.out_path, os.str());
  } else {
    emit(flags.out_path, to_json(result).dump(2) + "\n");
  }
  return 0;
}

int run_fit(const std::string& in_path, std::optional<int> order_filter,
            const std::string& format, const std::string& out_path) {
  const std::vector<SweepRecord> records = read_sweep_csv_file(in_path);
  std::vector<std::pair<double, double>> points;
  for (const SweepRecord& r : records) {
    if (order_filter && r.order != *order_filter) continue;
    points.emplace_back(r.N, static_cast<double>(r.R));
  }
  const FitResult fit = fit_power_law(points);
  nlohmann::json j{{"exponent", fit.exponent},
                   {"intercept", fit.intercept},
                   {"r_squared", fit.r_squared},
                   {"points", points.size()}};
  if (format == "csv") {
    std::ostringstream os;
    os << "exponent,intercept,r_squared,points\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%zu\n", fit.exponent, fit.intercept,
                  fit.r_squared, points.size());
    os << buf;
    emit(out_path, os.str());
  } else {
    emit(out_path, j.dump(2) + "\n");
  }
  return 0;
}

int run_compare(const CommonFlags& flags, std::uint64_t seed, int max_evals) {
  const SearchInstance instance(flags.n_qubits, flags.marked);
  const ScheduleSpec spec{variant_from_string(flags.variant), flags.steps, flags.eps1};
  const QaoaParams closed_form = synth_qaoa_params(schedule_discrete(spec, instance.size_as_double()));
  const double closed_form_objective = objective(instance, closed_form);

  OptimizerConfig config;
  config.depth = flags.steps;
  config.max_evals = max_evals;
  config.seed = seed;
  config.variant = spec.variant;
  config.eps1 = flags.eps1;
  const OptimizeResult optimized = optimize(instance, config);

  nlohmann::json j{{"n_qubits", flags.n_qubits},
                   {"p", flags.steps},
                   {"closed_form_objective", closed_form_objective},
                   {"optimized_objective", optimized.objective},
                   {"optimizer_evals", optimized.evals_used},
                   {"budget_exhausted", optimized.budget_exhausted},
                   {"closed_form_gamma", closed_form.gamma},
                   {"closed_form_beta", closed_form.beta},
                   {"optimized_gamma", optimized.params.gamma},
                   {"optimized_beta", optimized.params.beta}};
  emit(flags.out_path, j.dump(2) + "\n");
  return 0;
}

int dispatch(int argc, const char* const* argv) {
  CLI::App app{"Closed-form QAOA parameters from adiabatic Grover schedules"};
  app.require_subcommand(1);

  CommonFlags schedule_flags;
  CLI::App* schedule_cmd = app.add_subcommand("schedule", "emit s_l and the derived angles");
  add_common(schedule_cmd, schedule_flags, "csv");

  CommonFlags simulate_flags;
  std::string backend_name = "subspace";
  std::vector<double> gamma_override, beta_override;
  bool record_trace = false;
  CLI::App* simulate_cmd = app.add_subcommand("simulate", "run one circuit");
  add_common(simulate_cmd, simulate_flags, "json");
  simulate_cmd->add_option("--backend", backend_name, "subspace|statevector")
      ->check(CLI::IsMember({"subspace", "statevector"}));
  simulate_cmd->add_option("--gamma", gamma_override, "explicit cost angles")->delimiter(',');
  simulate_cmd->add_option("--beta", beta_override, "explicit mixer angles")->delimiter(',');
  simulate_cmd->add_flag("--trace", record_trace, "record per-step success probability");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "measure minimal step counts over a grid");
  SweepConfig sweep_defaults;
  int sweep_n_min = sweep_defaults.n_min, sweep_n_max = sweep_defaults.n_max;
  double sweep_target = sweep_defaults.target_err, sweep_eps1 = sweep_defaults.eps1;
  std::vector<int> sweep_orders = sweep_defaults.orders;
  std::string sweep_variant = to_string(sweep_defaults.variant);
  int sweep_refine = sweep_defaults.refine, sweep_workers = sweep_defaults.max_workers;
  std::uint64_t sweep_seed = sweep_defaults.seed;
  std::string sweep_out = sweep_defaults.out_path, config_path;
  sweep_cmd->add_option("--n-min", sweep_n_min, "smallest qubit count");
  sweep_cmd->add_option("--n-max", sweep_n_max, "largest qubit count");
  sweep_cmd->add_option("--target-err", sweep_target, "product-formula error threshold");
  sweep_cmd->add_option("--orders", sweep_orders, "orders to measure")->delimiter(',');
  sweep_cmd->add_option("--variant", sweep_variant, "schedule variant");
  sweep_cmd->add_option("--eps1", sweep_eps1, "adiabatic accuracy parameter");
  sweep_cmd->add_option("--refine", sweep_refine, "reference-grid multiplier");
  sweep_cmd->add_option("--seed", sweep_seed, "seed recorded in the manifest");
  sweep_cmd->add_option("--workers", sweep_workers, "worker threads (0: all cores)");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path");
  sweep_cmd->add_option("--config", config_path, "JSON config; explicit flags override");

  std::string fit_in, fit_format = "json", fit_out;
  int fit_order = 0;
  CLI::App* fit_cmd = app.add_subcommand("fit", "fit a power law to a sweep CSV");
  fit_cmd->add_option("--in", fit_in, "sweep CSV path")->required();
  fit_cmd->add_option("--order", fit_order, "restrict to one product-formula order");
  fit_cmd->add_option("--format", fit_format, "output format: csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  fit_cmd->add_option("--out", fit_out, "output path (default: stdout)");

  CommonFlags compare_flags;
  std::uint64_t compare_seed = 42;
  int compare_evals = 500;
  CLI::App* compare_cmd =
      app.add_subcommand("compare", "closed-form angles vs optimizer at equal depth");
  add_common(compare_cmd, compare_flags, "json");
  compare_cmd->add_option("--seed", compare_seed, "optimizer seed");
  compare_cmd->add_option("--max-evals", compare_evals, "optimizer evaluation budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help text or the usage error
    return code == 0 ? 0 : 1;
  }

  if (schedule_cmd->parsed()) return run_schedule(schedule_flags);
  if (simulate_cmd->parsed()) {
    return run_simulate(simulate_flags, backend_name, gamma_override, beta_override,
                        record_trace);
  }
  if (sweep_cmd->parsed()) {
    SweepConfig config;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) {
        throw io_error("cannot read " + config_path);
      }
      nlohmann::json j;
      in >> j;
      config = sweep_config_from_json(j);
    }
    auto take = [&](const char* flag, auto& dst, const auto& src) {
      if (sweep_cmd->count(flag) > 0) dst = src;
    };
    if (config_path.empty()) {
      config.n_min = sweep_n_min;
      config.n_max = sweep_n_max;
      config.target_err = sweep_target;
      config.orders = sweep_orders;
      config.variant = variant_from_string(sweep_variant);
      config.eps1 = sweep_eps1;
      config.refine = sweep_refine;
      config.seed = sweep_seed;
      config.out_path = sweep_out;
      config.max_workers = sweep_workers;
    } else {
      take("--n-min", config.n_min, sweep_n_min);
      take("--n-max", config.n_max, sweep_n_max);
      take("--target-err", config.target_err, sweep_target);
      take("--orders", config.orders, sweep_orders);
      take("--variant", config.variant, variant_from_string(sweep_variant));
      take("--eps1", config.eps1, sweep_eps1);
      take("--refine", config.refine, sweep_refine);
      take("--seed", config.seed, sweep_seed);
      take("--out", config.out_path, sweep_out);
      take("--workers", config.max_workers, sweep_workers);
    }
    const std::vector<SweepRecord> records = run_sweep(config);
    std::cerr << "wrote " << records.size() << " records to " << config.out_path << "\n";
    return 0;
  }
  if (fit_cmd->parsed()) {
    std::optional<int> order_filter;
    if (fit_cmd->count("--order") > 0) order_filter = fit_order;
    return run_fit(fit_in, order_filter, fit_format, fit_out);
  }
  if (compare_cmd->parsed()) return run_compare(compare_flags, compare_seed, compare_evals);
  return 1;
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  try {
    return dispatch(argc, argv);
  } catch (const io_error& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace agsq
