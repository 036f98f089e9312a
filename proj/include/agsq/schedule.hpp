// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace agsq {

/// Unstructured search instance over N = 2^n computational basis states with
/// a single marked index.
struct SearchInstance {
  int n_qubits;
  std::uint64_t marked;

  SearchInstance(int n_qubits, std::uint64_t marked = 0);

  std::uint64_t size() const { return std::uint64_t{1} << n_qubits; }
  double size_as_double() const { return static_cast<double>(size()); }
};

/// How the discrete schedule values s_1..s_R are generated.
///
/// PaperLiteral evaluates the closed-form large-N angle grid verbatim,
/// including its endpoint anomaly (s_R = 0). Regularized rescales the angle
/// range so the final step lands exactly on s = 1. ExactInversion samples the
/// exact inverse of the Roland-Cerf local schedule and is the default.
enum class Variant { PaperLiteral, Regularized, ExactInversion };

std::string to_string(Variant v);
Variant variant_from_string(const std::string& name);

struct ScheduleSpec {
  Variant variant = Variant::ExactInversion;
  int steps = 1;      // R
  double eps1 = 0.1;  // adiabatic accuracy parameter
};

/// Discretized annealing schedule. The mixer/cost weights are A(s) = 1 - s
/// and C(s) = s; tau * R = T.
struct Schedule {
  ScheduleSpec spec;
  double search_size = 0.0;  // N
  std::vector<double> s;     // s_1..s_R
  double tau = 0.0;          // T / R
  double T = 0.0;            // total evolution time
  bool out_of_range = false;  // PaperLiteral diagnostic: some s_l outside [0,1]

  int steps() const { return static_cast<int>(s.size()); }
};

/// Angle sequences for the alternating cost/mixer circuit, one pair per step.
/// Angles are stored unreduced (not folded mod 2pi).
struct QaoaParams {
  std::vector<double> gamma;
  std::vector<double> beta;

  int depth() const { return static_cast<int>(gamma.size()); }
};

/// Total evolution time T = (N / (eps1 sqrt(N-1))) * arctan(sqrt(N-1)),
/// the exact time at which the local schedule reaches s = 1.
/// Asymptotically T ~ pi sqrt(N) / (2 eps1).
double total_time(double search_size, double eps1);

/// Exact inverse of the Roland-Cerf local schedule:
///   s(t) = 1/2 + tan(theta(t) - theta0) / (2 sqrt(N-1)),
///   theta(t) = 2 t eps1 sqrt(N-1) / N, theta0 = arctan(sqrt(N-1)).
/// Maps [0, T] onto [0, 1], strictly increasing.
double schedule_continuous(double t, double search_size, double eps1);

Schedule schedule_discrete(const ScheduleSpec& spec, double search_size);

/// Closed-form angles from a discrete schedule:
///   gamma_l = tau s_l,
///   beta_l  = (tau/2)(2 - (s_l + s_{l+1})) for l < R,
///   beta_R  = (tau/2)(1 - s_R).
/// The leading half-mixer is dropped; it acts trivially on the uniform
/// initial state.
QaoaParams synth_qaoa_params(const Schedule& schedule);

nlohmann::json to_json(const Schedule& schedule, const QaoaParams& params);

/// CSV with header l,s,gamma,beta.
void write_schedule_csv(std::ostream& os, const Schedule& schedule, const QaoaParams& params);

}  // namespace agsq
