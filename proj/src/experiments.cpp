// SPDX-License-Identifier: Apache-2.0

#include "agsq/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "agsq/simulator.hpp"

namespace agsq {

namespace {

constexpr std::int64_t kMaxSteps = std::int64_t{1} << 22;

double trotter_err_at(const SearchInstance& instance, std::int64_t steps, TrotterOrder order,
                      Variant variant, double eps1) {
  const Schedule schedule = schedule_discrete(
      ScheduleSpec{variant, static_cast<int>(steps), eps1}, instance.size_as_double());
  return evolution_error(schedule, order).trotter_err;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::int64_t minimal_R(const SearchInstance& instance, TrotterOrder order, double target_err,
                       Variant variant, double eps1) {
  if (!(target_err > 0.0)) {
    throw std::invalid_argument("target error must be positive");
  }
  auto below = [&](std::int64_t steps) {
    return trotter_err_at(instance, steps, order, variant, eps1) <= target_err;
  };

  std::int64_t hi = 4;
  while (!below(hi)) {
    hi *= 2;
    if (hi > kMaxSteps) {
      throw std::runtime_error("minimal step search: target unreachable within 2^22 steps");
    }
  }
  // err(hi) <= target; bisect down to the smallest such step count.
  std::int64_t lo = (hi == 4) ? 0 : hi / 2;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (below(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

FitResult fit_power_law(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3) {
    throw std::invalid_argument("power-law fit needs at least 3 points");
  }
  const double count = static_cast<double>(points.size());
  double sx = 0.0, sy = 0.0;
  for (const auto& [x, y] : points) {
    if (!(x > 0.0) || !(y > 0.0)) {
      throw std::invalid_argument("power-law fit needs positive coordinates");
    }
    sx += std::log(x);
    sy += std::log(y);
  }
  const double mx = sx / count, my = sy / count;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& [x, y] : points) {
    const double dx = std::log(x) - mx;
    const double dy = std::log(y) - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx == 0.0) {
    throw std::invalid_argument("power-law fit needs at least two distinct abscissae");
  }
  FitResult fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  const double ss_res = syy - fit.exponent * sxy;
  fit.r_squared = (syy == 0.0) ? 1.0 : std::max(0.0, 1.0 - ss_res / syy);
  return fit;
}

namespace {

SweepRecord measure_cell(int n, int order_value, const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const SearchInstance instance(n, 0);
  const TrotterOrder order(order_value);

  const std::int64_t steps =
      minimal_R(instance, order, config.target_err, config.variant, config.eps1);
  const Schedule schedule = schedule_discrete(
      ScheduleSpec{config.variant, static_cast<int>(steps), config.eps1},
      instance.size_as_double());

  const ErrorReport report = evolution_error(schedule, order);
  const QaoaParams params = synth_qaoa_params(schedule);
  const double success = run_qaoa(instance, params, Backend::Subspace).success_prob;
  const double reference =
      run_reference_adiabatic(instance, schedule, config.refine).success_prob;

  SweepRecord record;
  record.n = n;
  record.N = instance.size_as_double();
  record.R = steps;
  record.order = order_value;
  record.variant = config.variant;
  record.eps1 = config.eps1;
  record.trotter_err = report.trotter_err;
  record.adiabatic_fidelity = reference;
  record.success_prob = success;
  record.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
          .count();
  return record;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  if (config.n_min < 1 || config.n_max < config.n_min) {
    throw std::invalid_argument("qubit range is empty");
  }
  if (!(config.target_err > 0.0)) {
    throw std::invalid_argument("target error must be positive");
  }
  for (int order : config.orders) TrotterOrder check(order);

  // Fail on an unwritable destination before doing any work.
  const std::filesystem::path out_path(config.out_path);
  const std::filesystem::path tmp_path(config.out_path + ".tmp");
  {
    std::ofstream probe(tmp_path);
    if (!probe) {
      throw io_error("cannot write " + config.out_path);
    }
  }

  std::vector<std::pair<int, int>> cells;  // (n, order)
  for (int n = config.n_min; n <= config.n_max; ++n) {
    for (int order : config.orders) cells.emplace_back(n, order);
  }

  std::vector<SweepRecord> records(cells.size());
  if (!cells.empty()) {
    unsigned workers = config.max_workers > 0 ? static_cast<unsigned>(config.max_workers)
                                              : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, cells.size()));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
        records[i] = measure_cell(cells[i].first, cells[i].second, config);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (std::thread& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.n, a.order, a.R) < std::tie(b.n, b.order, b.R);
  });

  std::ofstream out(tmp_path, std::ios::trunc);
  if (!out) {
    throw io_error("cannot write " + tmp_path.string());
  }
  write_sweep_csv(out, records);
  out.close();
  if (!out) {
    throw io_error("failed writing " + tmp_path.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp_path, out_path, ec);
  if (ec) {
    throw io_error("cannot move " + tmp_path.string() + " to " + config.out_path);
  }
  return records;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRecord>& records) {
  os << "n,N,R,order,variant,eps1,trotter_err,adiabatic_fidelity,success_prob,wall_ms\n";
  for (const SweepRecord& r : records) {
    os << r.n << ',' << format_double(r.N) << ',' << r.R << ',' << r.order << ','
       << to_string(r.variant) << ',' << format_double(r.eps1) << ','
       << format_double(r.trotter_err) << ',' << format_double(r.adiabatic_fidelity) << ','
       << format_double(r.success_prob) << ',' << format_double(r.wall_ms) << '\n';
  }
}

std::vector<SweepRecord> read_sweep_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::invalid_argument("empty CSV");
  }
  if (line != "n,N,R,order,variant,eps1,trotter_err,adiabatic_fidelity,success_prob,wall_ms") {
    throw std::invalid_argument("unexpected CSV header: " + line);
  }
  std::vector<SweepRecord> records;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    auto next = [&] {
      if (!std::getline(row, field, ',')) {
        throw std::invalid_argument("short CSV row: " + line);
      }
      return field;
    };
    SweepRecord r;
    r.n = std::stoi(next());
    r.N = std::stod(next());
    r.R = std::stoll(next());
    r.order = std::stoi(next());
    r.variant = variant_from_string(next());
    r.eps1 = std::stod(next());
    r.trotter_err = std::stod(next());
    r.adiabatic_fidelity = std::stod(next());
    r.success_prob = std::stod(next());
    r.wall_ms = std::stod(next());
    records.push_back(r);
  }
  return records;
}

std::vector<SweepRecord> read_sweep_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw io_error("cannot read " + path);
  }
  return read_sweep_csv(in);
}

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  SweepConfig config;
  config.n_min = j.value("n-min", config.n_min);
  config.n_max = j.value("n-max", config.n_max);
  config.target_err = j.value("target-err", config.target_err);
  config.orders = j.value("orders", config.orders);
  if (j.contains("variant")) config.variant = variant_from_string(j.at("variant"));
  config.eps1 = j.value("eps1", config.eps1);
  config.refine = j.value("refine", config.refine);
  config.seed = j.value("seed", config.seed);
  config.out_path = j.value("out", config.out_path);
  config.max_workers = j.value("workers", config.max_workers);
  return config;
}

nlohmann::json to_json(const SweepConfig& config) {
  return nlohmann::json{{"n-min", config.n_min},
                        {"n-max", config.n_max},
                        {"target-err", config.target_err},
                        {"orders", config.orders},
                        {"variant", to_string(config.variant)},
                        {"eps1", config.eps1},
                        {"refine", config.refine},
                        {"seed", config.seed},
                        {"out", config.out_path},
                        {"workers", config.max_workers}};
}

}  // namespace agsq
