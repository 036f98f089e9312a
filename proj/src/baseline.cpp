// SPDX-License-Identifier: Apache-2.0

#include "agsq/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>

#include "agsq/simulator.hpp"

namespace agsq {

double objective(const SearchInstance& instance, const QaoaParams& params) {
  return run_qaoa(instance, params, Backend::Subspace).success_prob;
}

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

QaoaParams params_from_point(const std::vector<double>& x) {
  const std::size_t p = x.size() / 2;
  QaoaParams params;
  params.gamma.assign(x.begin(), x.begin() + p);
  params.beta.assign(x.begin() + p, x.end());
  return params;
}

double fold_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

// Tracks the best point seen and the trace across all restarts.
struct EvalState {
  const SearchInstance& instance;
  int evals = 0;
  int max_evals;
  double best = -1.0;
  std::vector<double> best_point;
  OptimizerTrace trace;

  bool exhausted() const { return evals >= max_evals; }

  double eval(const std::vector<double>& x) {
    ++evals;
    const double value = objective(instance, params_from_point(x));
    if (value > best) {
      best = value;
      best_point = x;
    }
    trace.points.push_back({evals, best, best_point});
    return value;
  }
};

// Standard Nelder-Mead on f = -objective, run until the simplex objective
// spread drops below tol or the shared budget runs out.
void simplex_search(EvalState& state, std::vector<std::vector<double>> simplex, double tol) {
  const std::size_t dim = simplex[0].size();
  std::vector<double> value(simplex.size());
  for (std::size_t i = 0; i < simplex.size(); ++i) {
    if (state.exhausted()) return;
    value[i] = -state.eval(simplex[i]);
  }

  std::vector<std::size_t> order(simplex.size());
  while (!state.exhausted()) {
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second_worst = order[order.size() - 2];

    if (value[worst] - value[best] < tol) return;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t i : order) {
      if (i == worst) continue;
      for (std::size_t d = 0; d < dim; ++d) centroid[d] += simplex[i][d];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    auto blend = [&](double coeff) {
      std::vector<double> x(dim);
      for (std::size_t d = 0; d < dim; ++d) {
        x[d] = centroid[d] + coeff * (simplex[worst][d] - centroid[d]);
      }
      return x;
    };

    const std::vector<double> reflected = blend(-1.0);
    if (state.exhausted()) return;
    const double f_reflected = -state.eval(reflected);

    if (f_reflected < value[best]) {
      const std::vector<double> expanded = blend(-2.0);
      if (state.exhausted()) return;
      const double f_expanded = -state.eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }

    const bool outside = f_reflected < value[worst];
    const std::vector<double> contracted = blend(outside ? -0.5 : 0.5);
    if (state.exhausted()) return;
    const double f_contracted = -state.eval(contracted);
    if (f_contracted < (outside ? f_reflected : value[worst])) {
      simplex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }

    // Shrink toward the best vertex.
    for (std::size_t i : order) {
      if (i == best) continue;
      for (std::size_t d = 0; d < dim; ++d) {
        simplex[i][d] = simplex[best][d] + 0.5 * (simplex[i][d] - simplex[best][d]);
      }
      if (state.exhausted()) return;
      value[i] = -state.eval(simplex[i]);
    }
  }
}

}  // namespace

OptimizeResult optimize(const SearchInstance& instance, const OptimizerConfig& config) {
  if (config.depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (config.max_evals < 1) throw std::invalid_argument("evaluation budget must be at least 1");
  if (!(config.tol > 0.0)) throw std::invalid_argument("tol must be positive");
  if (config.restarts < 1) throw std::invalid_argument("need at least one restart");

  const std::size_t dim = 2 * static_cast<std::size_t>(config.depth);
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);

  EvalState state{instance};
  state.max_evals = config.max_evals;

  for (int restart = 0; restart < config.restarts && !state.exhausted(); ++restart) {
    std::vector<double> start(dim);
    if (restart == 0 && config.init == InitStrategy::ClosedForm) {
      const Schedule schedule = schedule_discrete(
          ScheduleSpec{config.variant, config.depth, config.eps1}, instance.size_as_double());
      const QaoaParams synth = synth_qaoa_params(schedule);
      std::copy(synth.gamma.begin(), synth.gamma.end(), start.begin());
      std::copy(synth.beta.begin(), synth.beta.end(), start.begin() + config.depth);
    } else {
      for (double& x : start) x = angle(rng);
    }

    std::vector<std::vector<double>> simplex(dim + 1, start);
    for (std::size_t d = 0; d < dim; ++d) simplex[d + 1][d] += 0.5;
    simplex_search(state, std::move(simplex), config.tol);
  }

  OptimizeResult result;
  result.objective = state.best;
  result.budget_exhausted = state.exhausted();
  result.evals_used = state.evals;
  result.trace = std::move(state.trace);
  QaoaParams best = params_from_point(state.best_point);
  for (double& g : best.gamma) g = fold_angle(g);
  for (double& b : best.beta) b = fold_angle(b);
  result.params = std::move(best);
  return result;
}

void write_trace_csv(std::ostream& os, const OptimizerTrace& trace) {
  os << "eval,best_objective\n";
  char buf[48];
  for (const TracePoint& point : trace.points) {
    std::snprintf(buf, sizeof buf, "%d,%.17g\n", point.eval, point.best);
    os << buf;
  }
}

}  // namespace agsq
