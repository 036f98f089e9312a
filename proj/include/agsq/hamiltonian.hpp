// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>

#include "agsq/mat2.hpp"

namespace agsq {

using Unitary2 = Mat2;

/// Interpolating Hamiltonian restricted to the invariant subspace spanned by
/// the marked state |omega> and the uniform superposition |r> of the
/// unmarked states. Real symmetric with unit trace:
///   [[ (1-s)(N-1)/N,   -(1-s)sqrt(N-1)/N ],
///    [ -(1-s)sqrt(N-1)/N, 1-(1-s)(N-1)/N ]]
struct Hamiltonian2 {
  double m00, m01, m10, m11;
  double s;
  double search_size;
};

struct EigenSystem2 {
  double lambda0, lambda1;         // lambda0 <= lambda1
  std::array<double, 2> ground;    // eigenvector for lambda0
  std::array<double, 2> excited;   // eigenvector for lambda1
};

Hamiltonian2 h_subspace(double s, double search_size);

/// Closed-form symmetric 2x2 eigensolve. Eigenvectors are unit length with
/// the first nonzero component positive, so outputs are deterministic.
EigenSystem2 eigensystem(const Hamiltonian2& h);

/// Spectral gap lambda1 - lambda0 of h_subspace(s, N). Equals
/// sqrt(1 - 4 s (1-s) (N-1)/N); minimum 1/sqrt(N) at s = 1/2.
double gap(double s, double search_size);

/// exp(-i H(s) dt) via the spectral decomposition.
Unitary2 exact_step(double s, double search_size, double dt);

/// Maximum of |<lambda1| dH/dt |lambda0>| / gap^2 over a uniform time grid,
/// with ds/dt taken by central finite difference (step 1e-6 T) of the given
/// schedule. The default schedule is the exact local one, which holds this
/// ratio near eps1 uniformly.
double adiabatic_margin(double search_size, double eps1, int grid_points);
double adiabatic_margin(double search_size, double eps1, int grid_points,
                        const std::function<double(double)>& schedule_of_t);

}  // namespace agsq
