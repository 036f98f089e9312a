// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "agsq/hamiltonian.hpp"
#include "agsq/schedule.hpp"

namespace agsq {

/// Even product-formula order 2k, supported for 2k in {2, 4, 6, 8}.
struct TrotterOrder {
  int order;

  explicit TrotterOrder(int o);
  int k() const { return order / 2; }
};

/// Error components of one discretized evolution. trotter_err is the
/// operator-norm distance between the exact-step product and its product
/// formula on the same grid; adiabatic_infidelity is 1 - |<omega|psi(T)>|^2
/// for the exact-step product applied to the uniform initial state.
struct ErrorReport {
  double trotter_err;
  double adiabatic_infidelity;
  double total_err;  // trotter_err + eps1
  double eps1;
};

/// Symmetric second-order split of one step:
///   exp(-i dt (1-s) H0 / 2) exp(-i dt s Hf) exp(-i dt (1-s) H0 / 2).
Unitary2 strang_step(double s, double search_size, double dt);

/// Recursive higher-order formula. Order 2 is strang_step; order 2k applies
///   U_{2k-2}(c dt)^2 U_{2k-2}((1-4c) dt) U_{2k-2}(c dt)^2
/// with c = 1 / (4 - 4^{1/(2k-1)}).
Unitary2 suzuki_step(TrotterOrder order, double s, double search_size, double dt);

/// Spectral norm of U - V.
double op_norm_diff(const Unitary2& u, const Unitary2& v);

/// Time-ordered product of exact per-step propagators over the schedule grid
/// (step 1 applied first, i.e. rightmost).
Unitary2 exact_grid_product(const Schedule& schedule);

/// Matching product of product-formula steps. For order 2 the adjacent
/// mixer half-steps are merged (exact regrouping: exponentials of the same
/// operator commute), leaving one leading half-mixer, the per-step cost
/// factors, and the merged mixer factors.
Unitary2 trotter_grid_product(const Schedule& schedule, TrotterOrder order);

ErrorReport evolution_error(const Schedule& schedule, TrotterOrder order);

/// Step count from the error-budget formula
///   R = ceil(constant * ((2T)^{2k+1} / (eps - eps1))^{1/(2k)})
/// with T the total evolution time for (N, eps1). The constant calibrates
/// the unknown prefactor; empirical calibration lives in the sweep driver.
std::int64_t required_R(double search_size, double eps, double eps1, TrotterOrder order,
                        double constant = 1.0);

/// Same formula with the evolution time given directly.
std::int64_t required_steps_for_time(double evolution_time, double trotter_budget,
                                     TrotterOrder order, double constant = 1.0);

}  // namespace agsq
