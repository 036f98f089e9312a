// SPDX-License-Identifier: Apache-2.0

#include "agsq/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "agsq/schedule.hpp"

namespace agsq {

Hamiltonian2 h_subspace(double s, double search_size) {
  if (!(search_size >= 2.0)) {
    throw std::invalid_argument("search size must be at least 2");
  }
  const double diag = (1.0 - s) * (search_size - 1.0) / search_size;
  const double off = -(1.0 - s) * std::sqrt(search_size - 1.0) / search_size;
  return Hamiltonian2{diag, off, off, 1.0 - diag, s, search_size};
}

EigenSystem2 eigensystem(const Hamiltonian2& h) {
  const double a = h.m00, b = h.m01, d = h.m11;
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), b);
  EigenSystem2 out;
  out.lambda0 = mean - radius;
  out.lambda1 = mean + radius;

  // Two algebraically equivalent eigenvector forms per eigenvalue; pick the
  // better-conditioned one, then fix the sign.
  auto vector_for = [&](double lambda) -> std::array<double, 2> {
    std::array<double, 2> u{b, lambda - a};
    std::array<double, 2> w{lambda - d, b};
    const double nu = std::hypot(u[0], u[1]);
    const double nw = std::hypot(w[0], w[1]);
    std::array<double, 2> v{};
    double n;
    if (nu >= nw) {
      v = u;
      n = nu;
    } else {
      v = w;
      n = nw;
    }
    if (n == 0.0) return {1.0, 0.0};  // degenerate (multiple of identity)
    v[0] /= n;
    v[1] /= n;
    const double lead = (v[0] != 0.0) ? v[0] : v[1];
    if (lead < 0.0) {
      v[0] = -v[0];
      v[1] = -v[1];
    }
    return v;
  };

  out.ground = vector_for(out.lambda0);
  out.excited = vector_for(out.lambda1);
  return out;
}

double gap(double s, double search_size) {
  const EigenSystem2 es = eigensystem(h_subspace(s, search_size));
  return es.lambda1 - es.lambda0;
}

Unitary2 exact_step(double s, double search_size, double dt) {
  const EigenSystem2 es = eigensystem(h_subspace(s, search_size));
  const cplx e0 = std::exp(cplx{0.0, -es.lambda0 * dt});
  const cplx e1 = std::exp(cplx{0.0, -es.lambda1 * dt});
  const auto& g = es.ground;
  const auto& x = es.excited;
  Unitary2 u;
  u(0, 0) = e0 * (g[0] * g[0]) + e1 * (x[0] * x[0]);
  u(0, 1) = e0 * (g[0] * g[1]) + e1 * (x[0] * x[1]);
  u(1, 0) = u(0, 1);
  u(1, 1) = e0 * (g[1] * g[1]) + e1 * (x[1] * x[1]);
  return u;
}

double adiabatic_margin(double search_size, double eps1, int grid_points,
                        const std::function<double(double)>& schedule_of_t) {
  if (grid_points < 100) {
    throw std::invalid_argument("margin grid needs at least 100 points");
  }
  const double T = total_time(search_size, eps1);
  const double h = 1e-6 * T;

  // dH/ds is constant for the linear interpolation.
  const Hamiltonian2 h0 = h_subspace(0.0, search_size);
  const Hamiltonian2 h1 = h_subspace(1.0, search_size);
  const double d00 = h1.m00 - h0.m00;
  const double d01 = h1.m01 - h0.m01;
  const double d11 = h1.m11 - h0.m11;

  double max_margin = 0.0;
  for (int i = 0; i <= grid_points; ++i) {
    const double t = T * (static_cast<double>(i) / grid_points);
    const double lo = std::max(0.0, t - h);
    const double hi = std::min(T, t + h);
    const double dsdt = (schedule_of_t(hi) - schedule_of_t(lo)) / (hi - lo);

    const EigenSystem2 es = eigensystem(h_subspace(schedule_of_t(t), search_size));
    const auto& g = es.ground;
    const auto& x = es.excited;
    const double elem = x[0] * (d00 * g[0] + d01 * g[1]) + x[1] * (d01 * g[0] + d11 * g[1]);
    const double gap2 = (es.lambda1 - es.lambda0) * (es.lambda1 - es.lambda0);
    max_margin = std::max(max_margin, std::abs(dsdt * elem) / gap2);
  }
  return max_margin;
}

double adiabatic_margin(double search_size, double eps1, int grid_points) {
  return adiabatic_margin(search_size, eps1, grid_points, [&](double t) {
    return schedule_continuous(t, search_size, eps1);
  });
}

}  // namespace agsq
