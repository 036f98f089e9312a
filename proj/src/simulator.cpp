// SPDX-License-Identifier: Apache-2.0

#include "agsq/simulator.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "agsq/hamiltonian.hpp"

namespace agsq {

std::string to_string(Backend b) {
  return b == Backend::Subspace ? "subspace" : "statevector";
}

Backend backend_from_string(const std::string& name) {
  if (name == "subspace") return Backend::Subspace;
  if (name == "statevector") return Backend::Statevector;
  throw std::invalid_argument("unknown backend: " + name);
}

double StateVector::squared_norm() const {
  double total = 0.0;
  for (const cplx& a : amps) total += std::norm(a);
  return total;
}

SubspaceState initial_subspace_state(double search_size) {
  return SubspaceState{cplx{1.0 / std::sqrt(search_size)},
                       cplx{std::sqrt((search_size - 1.0) / search_size)}};
}

StateVector initial_statevector(const SearchInstance& instance, int max_qubits) {
  if (instance.n_qubits > max_qubits) {
    throw std::invalid_argument("statevector backend capped at " + std::to_string(max_qubits) +
                                " qubits");
  }
  StateVector state;
  state.amps.assign(instance.size(), cplx{1.0 / std::sqrt(instance.size_as_double())});
  return state;
}

void apply_cost(SubspaceState& state, double gamma) {
  state.a_r *= std::exp(cplx{0.0, -gamma});
}

void apply_cost(StateVector& state, const SearchInstance& instance, double gamma) {
  const cplx phase = std::exp(cplx{0.0, -gamma});
  const cplx marked_amp = state.amps[instance.marked];
  for (cplx& a : state.amps) a *= phase;
  state.amps[instance.marked] = marked_amp;
}

void apply_mixer(SubspaceState& state, double search_size, double beta) {
  const SubspaceState psi0 = initial_subspace_state(search_size);
  const cplx overlap = std::conj(psi0.a_omega) * state.a_omega + std::conj(psi0.a_r) * state.a_r;
  const cplx phase = std::exp(cplx{0.0, -beta});
  const cplx feed = (1.0 - phase) * overlap;
  state.a_omega = phase * state.a_omega + feed * psi0.a_omega;
  state.a_r = phase * state.a_r + feed * psi0.a_r;
}

void apply_mixer(StateVector& state, double beta) {
  const double amp0 = 1.0 / std::sqrt(static_cast<double>(state.amps.size()));
  cplx sum{};
  for (const cplx& a : state.amps) sum += a;
  const cplx overlap = amp0 * sum;
  const cplx phase = std::exp(cplx{0.0, -beta});
  const cplx feed = (1.0 - phase) * overlap * amp0;
  for (cplx& a : state.amps) a = phase * a + feed;
}

namespace {

double success_prob_of(const SubspaceState& s) { return s.success_prob(); }

double success_prob_of(const StateVector& s, const SearchInstance& instance) {
  return std::norm(s.amps[instance.marked]);
}

}  // namespace

RunResult run_qaoa(const SearchInstance& instance, const QaoaParams& params, Backend backend,
                   const RunOptions& options) {
  const int depth = params.depth();
  if (depth < 1) {
    throw std::invalid_argument("parameter sequences must be nonempty");
  }
  if (params.gamma.size() != params.beta.size()) {
    throw std::invalid_argument("gamma and beta lengths differ");
  }

  RunResult result;
  if (options.record_trace) result.trace.reserve(depth);

  if (backend == Backend::Subspace) {
    SubspaceState state = initial_subspace_state(instance.size_as_double());
    for (int l = 0; l < depth; ++l) {
      apply_cost(state, params.gamma[l]);
      apply_mixer(state, instance.size_as_double(), params.beta[l]);
      if (options.record_trace) result.trace.push_back(success_prob_of(state));
    }
    result.success_prob = success_prob_of(state);
    result.state = state;
  } else {
    StateVector state = initial_statevector(instance, options.max_statevector_qubits);
    for (int l = 0; l < depth; ++l) {
      apply_cost(state, instance, params.gamma[l]);
      apply_mixer(state, params.beta[l]);
      if (options.record_trace) result.trace.push_back(success_prob_of(state, instance));
    }
    result.success_prob = success_prob_of(state, instance);
    result.state = std::move(state);
  }
  return result;
}

RunResult run_exact_steps(const SearchInstance& instance, const std::vector<double>& s,
                          double dt, const RunOptions& options) {
  const double n = instance.size_as_double();
  SubspaceState state = initial_subspace_state(n);

  RunResult result;
  if (options.record_trace) result.trace.reserve(s.size());
  for (double sl : s) {
    const Unitary2 u = exact_step(sl, n, dt);
    const Vec2 v = u * Vec2{state.a_omega, state.a_r};
    state.a_omega = v.x;
    state.a_r = v.y;
    if (options.record_trace) result.trace.push_back(state.success_prob());
  }
  result.success_prob = state.success_prob();
  result.state = state;
  return result;
}

RunResult run_reference_adiabatic(const SearchInstance& instance, const Schedule& schedule,
                                  int refine, const RunOptions& options) {
  if (refine < 1) {
    throw std::invalid_argument("refine multiplier must be at least 1");
  }
  const double n = instance.size_as_double();
  const std::int64_t fine_steps = static_cast<std::int64_t>(schedule.steps()) * refine;
  const double eps1 = schedule.spec.eps1;
  const double T = schedule.T;

  std::vector<double> s(fine_steps);
  for (std::int64_t l = 1; l <= fine_steps; ++l) {
    s[l - 1] = schedule_continuous(T * (static_cast<double>(l) / fine_steps), n, eps1);
  }
  return run_exact_steps(instance, s, T / fine_steps, options);
}

SubspaceState project_onto_subspace(const StateVector& state, const SearchInstance& instance) {
  cplx sum{};
  for (std::size_t x = 0; x < state.amps.size(); ++x) {
    if (x != instance.marked) sum += state.amps[x];
  }
  return SubspaceState{state.amps[instance.marked],
                       sum / std::sqrt(instance.size_as_double() - 1.0)};
}

double out_of_subspace_residual(const StateVector& state, const SearchInstance& instance) {
  const SubspaceState proj = project_onto_subspace(state, instance);
  return std::max(0.0, state.squared_norm() - proj.squared_norm());
}

nlohmann::json to_json(const RunResult& result) {
  return nlohmann::json{{"success_prob", result.success_prob}, {"trace", result.trace}};
}

namespace {

void write_csv_row(std::ostream& os, std::size_t index, const cplx& a) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", index, a.real(), a.imag());
  os << buf;
}

}  // namespace

void write_state_csv(std::ostream& os, const StateVector& state) {
  os << "index,re,im\n";
  for (std::size_t x = 0; x < state.amps.size(); ++x) write_csv_row(os, x, state.amps[x]);
}

void write_state_csv(std::ostream& os, const SubspaceState& state) {
  os << "index,re,im\n";
  write_csv_row(os, 0, state.a_omega);
  write_csv_row(os, 1, state.a_r);
}

}  // namespace agsq
