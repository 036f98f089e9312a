// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <variant>
#include <vector>

#include <json.hpp>

#include "agsq/mat2.hpp"
#include "agsq/schedule.hpp"

namespace agsq {

enum class Backend { Subspace, Statevector };

std::string to_string(Backend b);
Backend backend_from_string(const std::string& name);

/// State in the 2D invariant subspace: amplitude on the marked state and on
/// the uniform superposition |r> of the unmarked states.
struct SubspaceState {
  cplx a_omega;
  cplx a_r;

  double success_prob() const { return std::norm(a_omega); }
  double squared_norm() const { return std::norm(a_omega) + std::norm(a_r); }
};

/// Full 2^n amplitude vector.
struct StateVector {
  std::vector<cplx> amps;

  double squared_norm() const;
};

struct RunResult {
  std::variant<SubspaceState, StateVector> state;
  double success_prob = 0.0;
  std::vector<double> trace;  // per-step success probability, opt-in
};

struct RunOptions {
  bool record_trace = false;
  int max_statevector_qubits = 24;  // memory guard for the full backend
};

SubspaceState initial_subspace_state(double search_size);
StateVector initial_statevector(const SearchInstance& instance, int max_qubits = 24);

/// Cost phase exp(-i gamma Hf): the marked amplitude is untouched, every
/// other amplitude picks up e^{-i gamma}.
void apply_cost(SubspaceState& state, double gamma);
void apply_cost(StateVector& state, const SearchInstance& instance, double gamma);

/// Mixer exp(-i beta H0): |v> -> e^{-i beta} v + (1 - e^{-i beta}) <psi0|v> |psi0>.
/// Both backends use the same expression, so global phases agree exactly.
void apply_mixer(SubspaceState& state, double search_size, double beta);
void apply_mixer(StateVector& state, double beta);

/// Alternating circuit: for each step l, cost with gamma_l then mixer with
/// beta_l, starting from the uniform superposition.
RunResult run_qaoa(const SearchInstance& instance, const QaoaParams& params, Backend backend,
                   const RunOptions& options = {});

/// Time-ordered product of exact subspace steps for the given s values, each
/// over time dt.
RunResult run_exact_steps(const SearchInstance& instance, const std::vector<double>& s,
                          double dt, const RunOptions& options = {});

/// Reference discretized adiabatic evolution: exact subspace steps on the
/// exact-inversion grid refined by the given multiplier. At refine >= 64 the
/// result stands in for the continuous evolution.
RunResult run_reference_adiabatic(const SearchInstance& instance, const Schedule& schedule,
                                  int refine, const RunOptions& options = {});

/// Projection of a full statevector onto the invariant subspace.
SubspaceState project_onto_subspace(const StateVector& state, const SearchInstance& instance);

/// Squared norm of the component outside the invariant subspace.
double out_of_subspace_residual(const StateVector& state, const SearchInstance& instance);

nlohmann::json to_json(const RunResult& result);
void write_state_csv(std::ostream& os, const StateVector& state);   // index,re,im
void write_state_csv(std::ostream& os, const SubspaceState& state);

}  // namespace agsq
