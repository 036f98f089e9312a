// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "agsq/schedule.hpp"
#include "agsq/trotter.hpp"

namespace agsq {

/// Filesystem failures surfaced by the drivers; mapped to exit code 2 by the
/// CLI.
struct io_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  int n_min = 2;
  int n_max = 8;
  double target_err = 1e-3;
  std::vector<int> orders = {2};
  Variant variant = Variant::ExactInversion;
  double eps1 = 0.1;
  int refine = 64;
  std::uint64_t seed = 42;
  std::string out_path = "sweep.csv";
  int max_workers = 0;  // 0: hardware concurrency
};

/// One measured grid cell. Matches the CSV schema
/// n,N,R,order,variant,eps1,trotter_err,adiabatic_fidelity,success_prob,wall_ms.
struct SweepRecord {
  int n;
  double N;
  std::int64_t R;
  int order;
  Variant variant;
  double eps1;
  double trotter_err;
  double adiabatic_fidelity;
  double success_prob;
  double wall_ms;
};

struct FitResult {
  double exponent;
  double intercept;  // in log space
  double r_squared;
};

/// Smallest R whose measured product-formula error is at or below the
/// target: doubling search from R = 4, then bisection. Throws if the target
/// is still unreached at R = 2^22.
std::int64_t minimal_R(const SearchInstance& instance, TrotterOrder order, double target_err,
                       Variant variant, double eps1);

/// Least squares on (log N, log R).
FitResult fit_power_law(const std::vector<std::pair<double, double>>& points);

/// Evaluates every (n, order) cell and writes the CSV atomically. Records are
/// sorted by (n, order, R) regardless of worker scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records);
std::vector<SweepRecord> read_sweep_csv(std::istream& is);
std::vector<SweepRecord> read_sweep_csv_file(const std::string& path);

SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SweepConfig& config);

}  // namespace agsq
