// SPDX-License-Identifier: Apache-2.0

#include "agsq/schedule.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace agsq {

namespace {

void check_search_size(double search_size) {
  if (!(search_size >= 2.0)) {
    throw std::invalid_argument("search size must be at least 2");
  }
}

void check_eps1(double eps1) {
  if (!(eps1 > 0.0) || eps1 > 1.0) {
    throw std::invalid_argument("eps1 must lie in (0, 1]");
  }
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

SearchInstance::SearchInstance(int n, std::uint64_t m) : n_qubits(n), marked(m) {
  if (n_qubits < 1 || n_qubits > 62) {
    throw std::invalid_argument("n_qubits must be in [1, 62]");
  }
  if (marked >= size()) {
    throw std::invalid_argument("marked index out of range");
  }
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::PaperLiteral: return "paper";
    case Variant::Regularized: return "regularized";
    case Variant::ExactInversion: return "exact";
  }
  return "exact";
}

Variant variant_from_string(const std::string& name) {
  if (name == "paper") return Variant::PaperLiteral;
  if (name == "regularized") return Variant::Regularized;
  if (name == "exact") return Variant::ExactInversion;
  throw std::invalid_argument("unknown schedule variant: " + name);
}

double total_time(double search_size, double eps1) {
  check_search_size(search_size);
  check_eps1(eps1);
  const double root = std::sqrt(search_size - 1.0);
  return search_size / (eps1 * root) * std::atan(root);
}

double schedule_continuous(double t, double search_size, double eps1) {
  const double T = total_time(search_size, eps1);
  if (!(t >= 0.0) || t > T * (1.0 + 1e-9)) {
    throw std::invalid_argument("time outside [0, T]");
  }
  if (t == 0.0) return 0.0;
  if (t == T) return 1.0;
  const double root = std::sqrt(search_size - 1.0);
  const double theta0 = std::atan(root);
  const double theta = 2.0 * t * eps1 * root / search_size;
  return 0.5 + std::tan(theta - theta0) / (2.0 * root);
}

namespace {

// s as a function of the tangent angle, written with cot so the step at
// theta = pi/2 stays finite.
double s_of_angle(double theta, double sqrt_n) {
  const double cot = std::cos(theta) / std::sin(theta);
  return 1.0 / (2.0 + 2.0 * cot / sqrt_n);
}

}  // namespace

Schedule schedule_discrete(const ScheduleSpec& spec, double search_size) {
  check_search_size(search_size);
  check_eps1(spec.eps1);
  if (spec.steps < 1) {
    throw std::invalid_argument("step count must be at least 1");
  }

  const int steps = spec.steps;
  Schedule out;
  out.spec = spec;
  out.search_size = search_size;
  out.T = total_time(search_size, spec.eps1);
  out.tau = out.T / steps;
  out.s.resize(steps);

  const double sqrt_n = std::sqrt(search_size);
  switch (spec.variant) {
    case Variant::PaperLiteral:
      for (int l = 1; l <= steps; ++l) {
        double sl;
        if (l == steps) {
          sl = 0.0;  // tan(pi) = 0: the formula's endpoint anomaly
        } else if (2 * l == steps) {
          sl = 0.5;  // cot(pi/2) = 0
        } else {
          sl = s_of_angle(M_PI * l / steps, sqrt_n);
        }
        out.s[l - 1] = sl;
        if (!(sl >= 0.0 && sl <= 1.0)) out.out_of_range = true;
      }
      break;
    case Variant::Regularized: {
      // Stop the angle sweep where s reaches 1 instead of overshooting to pi.
      const double theta_max = M_PI - std::atan(2.0 / sqrt_n);
      for (int l = 1; l <= steps; ++l) {
        out.s[l - 1] = (l == steps) ? 1.0 : s_of_angle(theta_max * l / steps, sqrt_n);
      }
      break;
    }
    case Variant::ExactInversion:
      for (int l = 1; l <= steps; ++l) {
        const double t = out.T * (static_cast<double>(l) / steps);
        out.s[l - 1] = schedule_continuous(t, search_size, spec.eps1);
      }
      break;
  }
  return out;
}

QaoaParams synth_qaoa_params(const Schedule& schedule) {
  const int steps = schedule.steps();
  if (steps < 1) {
    throw std::invalid_argument("schedule must have at least one step");
  }
  const double tau = schedule.tau;
  QaoaParams params;
  params.gamma.resize(steps);
  params.beta.resize(steps);
  for (int l = 0; l < steps; ++l) {
    params.gamma[l] = tau * schedule.s[l];
  }
  for (int l = 0; l + 1 < steps; ++l) {
    params.beta[l] = 0.5 * tau * (2.0 - (schedule.s[l] + schedule.s[l + 1]));
  }
  params.beta[steps - 1] = 0.5 * tau * (1.0 - schedule.s[steps - 1]);
  return params;
}

nlohmann::json to_json(const Schedule& schedule, const QaoaParams& params) {
  return nlohmann::json{{"variant", to_string(schedule.spec.variant)},
                        {"N", static_cast<std::uint64_t>(schedule.search_size)},
                        {"R", schedule.steps()},
                        {"eps1", schedule.spec.eps1},
                        {"tau", schedule.tau},
                        {"T", schedule.T},
                        {"s", schedule.s},
                        {"gamma", params.gamma},
                        {"beta", params.beta}};
}

void write_schedule_csv(std::ostream& os, const Schedule& schedule, const QaoaParams& params) {
  os << "l,s,gamma,beta\n";
  for (int l = 0; l < schedule.steps(); ++l) {
    os << (l + 1) << ',' << format_double(schedule.s[l]) << ','
       << format_double(params.gamma[l]) << ',' << format_double(params.beta[l]) << '\n';
  }
}

}  // namespace agsq
