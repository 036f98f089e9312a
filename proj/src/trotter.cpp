// SPDX-License-Identifier: Apache-2.0

#include "agsq/trotter.hpp"

#include <cmath>
#include <stdexcept>

namespace agsq {

namespace {

Mat2 to_mat(const Hamiltonian2& h) {
  return Mat2{{cplx{h.m00}, cplx{h.m01}, cplx{h.m10}, cplx{h.m11}}};
}

// exp(-i theta P) for a projector P (P^2 = P): I + (e^{-i theta} - 1) P.
Mat2 projector_exp(const Mat2& p, double theta) {
  const cplx f = std::exp(cplx{0.0, -theta}) - 1.0;
  Mat2 u = Mat2::identity();
  for (int i = 0; i < 4; ++i) u.m[i] += f * p.m[i];
  return u;
}

// Both split Hamiltonians are projectors in the invariant subspace: the
// mixer term at s = 0 and the cost term at s = 1.
struct SplitTerms {
  Mat2 mixer;
  Mat2 cost;

  explicit SplitTerms(double search_size)
      : mixer(to_mat(h_subspace(0.0, search_size))),
        cost(to_mat(h_subspace(1.0, search_size))) {}
};

Mat2 strang_step_impl(const SplitTerms& terms, double s, double dt) {
  const Mat2 half_mixer = projector_exp(terms.mixer, 0.5 * dt * (1.0 - s));
  const Mat2 cost = projector_exp(terms.cost, dt * s);
  return half_mixer * cost * half_mixer;
}

Mat2 suzuki_step_impl(const SplitTerms& terms, int order, double s, double dt) {
  if (order == 2) return strang_step_impl(terms, s, dt);
  const int k = order / 2;
  const double c = 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * k - 1.0)));
  const Mat2 outer = suzuki_step_impl(terms, order - 2, s, c * dt);
  const Mat2 middle = suzuki_step_impl(terms, order - 2, s, (1.0 - 4.0 * c) * dt);
  return outer * outer * middle * outer * outer;
}

}  // namespace

TrotterOrder::TrotterOrder(int o) : order(o) {
  if (order < 2 || order > 8 || order % 2 != 0) {
    throw std::invalid_argument("product-formula order must be one of {2, 4, 6, 8}");
  }
}

Unitary2 strang_step(double s, double search_size, double dt) {
  return strang_step_impl(SplitTerms(search_size), s, dt);
}

Unitary2 suzuki_step(TrotterOrder order, double s, double search_size, double dt) {
  return suzuki_step_impl(SplitTerms(search_size), order.order, s, dt);
}

double op_norm_diff(const Unitary2& u, const Unitary2& v) { return op_norm(u - v); }

Unitary2 exact_grid_product(const Schedule& schedule) {
  Mat2 u = Mat2::identity();
  for (int l = 0; l < schedule.steps(); ++l) {
    u = exact_step(schedule.s[l], schedule.search_size, schedule.tau) * u;
  }
  return u;
}

Unitary2 trotter_grid_product(const Schedule& schedule, TrotterOrder order) {
  const SplitTerms terms(schedule.search_size);
  const double tau = schedule.tau;
  const int steps = schedule.steps();

  if (order.order > 2) {
    Mat2 u = Mat2::identity();
    for (int l = 0; l < steps; ++l) {
      u = suzuki_step_impl(terms, order.order, schedule.s[l], tau) * u;
    }
    return u;
  }

  // Order 2 with merged mixer half-steps: a leading half-mixer, then per
  // step the cost factor followed by the mixer angle shared with the next
  // step (a trailing half for the last one).
  Mat2 u = projector_exp(terms.mixer, 0.5 * tau * (1.0 - schedule.s[0]));
  for (int l = 0; l < steps; ++l) {
    u = projector_exp(terms.cost, tau * schedule.s[l]) * u;
    double beta;
    if (l + 1 < steps) {
      beta = 0.5 * tau * (2.0 - (schedule.s[l] + schedule.s[l + 1]));
    } else {
      beta = 0.5 * tau * (1.0 - schedule.s[l]);
    }
    u = projector_exp(terms.mixer, beta) * u;
  }
  return u;
}

ErrorReport evolution_error(const Schedule& schedule, TrotterOrder order) {
  const Unitary2 exact = exact_grid_product(schedule);
  const Unitary2 approx = trotter_grid_product(schedule, order);

  const double n = schedule.search_size;
  const Vec2 psi0{cplx{1.0 / std::sqrt(n)}, cplx{std::sqrt((n - 1.0) / n)}};
  const Vec2 final_state = exact * psi0;

  ErrorReport report;
  report.trotter_err = op_norm_diff(exact, approx);
  report.adiabatic_infidelity = 1.0 - std::norm(final_state.x);
  report.eps1 = schedule.spec.eps1;
  report.total_err = report.trotter_err + report.eps1;
  return report;
}

std::int64_t required_steps_for_time(double evolution_time, double trotter_budget,
                                     TrotterOrder order, double constant) {
  if (!(trotter_budget > 0.0)) {
    throw std::invalid_argument("trotter error budget must be positive");
  }
  const double two_k = 2.0 * order.k();
  const double value =
      constant * std::pow(std::pow(2.0 * evolution_time, two_k + 1.0) / trotter_budget,
                          1.0 / two_k);
  return static_cast<std::int64_t>(std::ceil(value));
}

std::int64_t required_R(double search_size, double eps, double eps1, TrotterOrder order,
                        double constant) {
  if (eps <= eps1) {
    throw std::invalid_argument("total error budget must exceed eps1");
  }
  return required_steps_for_time(total_time(search_size, eps1), eps - eps1, order, constant);
}

}  // namespace agsq
