// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "agsq/schedule.hpp"

namespace agsq {

enum class InitStrategy { Random, ClosedForm };

struct OptimizerConfig {
  int depth = 1;  // p
  int max_evals = 500;
  double tol = 1e-6;
  std::uint64_t seed = 42;
  InitStrategy init = InitStrategy::Random;
  int restarts = 3;
  // Schedule used to synthesize the ClosedForm starting point.
  Variant variant = Variant::ExactInversion;
  double eps1 = 0.1;
};

struct TracePoint {
  int eval;          // 1-based evaluation index
  double best;       // best objective seen so far
  std::vector<double> params;  // gamma_1..gamma_p, beta_1..beta_p of the best point
};

struct OptimizerTrace {
  std::vector<TracePoint> points;
};

struct OptimizeResult {
  QaoaParams params;  // angles folded into [0, 2pi)
  double objective;
  OptimizerTrace trace;
  bool budget_exhausted;
  int evals_used;
};

/// Success probability of the circuit on the subspace backend.
double objective(const SearchInstance& instance, const QaoaParams& params);

/// Derivative-free downhill-simplex search over the 2p angles, with seeded
/// restarts. Deterministic for a fixed (instance, config).
OptimizeResult optimize(const SearchInstance& instance, const OptimizerConfig& config);

/// CSV with header eval,best_objective.
void write_trace_csv(std::ostream& os, const OptimizerTrace& trace);

}  // namespace agsq
