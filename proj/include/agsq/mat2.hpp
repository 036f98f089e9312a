// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace agsq {

using cplx = std::complex<double>;

/// Amplitude pair in the 2D invariant subspace spanned by {|omega>, |r>}.
struct Vec2 {
  cplx x{};
  cplx y{};
};

/// Dense complex 2x2 matrix, row-major.
struct Mat2 {
  std::array<cplx, 4> m{};

  static Mat2 identity() { return Mat2{{cplx{1.0}, cplx{0.0}, cplx{0.0}, cplx{1.0}}}; }

  cplx& operator()(int r, int c) { return m[2 * r + c]; }
  const cplx& operator()(int r, int c) const { return m[2 * r + c]; }

  Mat2 adjoint() const {
    return Mat2{{std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])}};
  }

  friend Mat2 operator*(const Mat2& a, const Mat2& b) {
    return Mat2{{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
                 a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
  }

  friend Vec2 operator*(const Mat2& a, const Vec2& v) {
    return Vec2{a.m[0] * v.x + a.m[1] * v.y, a.m[2] * v.x + a.m[3] * v.y};
  }

  friend Mat2 operator+(const Mat2& a, const Mat2& b) {
    return Mat2{{a.m[0] + b.m[0], a.m[1] + b.m[1], a.m[2] + b.m[2], a.m[3] + b.m[3]}};
  }

  friend Mat2 operator-(const Mat2& a, const Mat2& b) {
    return Mat2{{a.m[0] - b.m[0], a.m[1] - b.m[1], a.m[2] - b.m[2], a.m[3] - b.m[3]}};
  }

  friend Mat2 operator*(cplx s, const Mat2& a) {
    return Mat2{{s * a.m[0], s * a.m[1], s * a.m[2], s * a.m[3]}};
  }
};

inline cplx inner(const Vec2& a, const Vec2& b) {
  return std::conj(a.x) * b.x + std::conj(a.y) * b.y;
}

inline double squared_norm(const Vec2& v) { return std::norm(v.x) + std::norm(v.y); }

/// Largest entry magnitude; used for unitarity checks.
inline double max_abs(const Mat2& a) {
  double r = 0.0;
  for (const auto& e : a.m) r = std::max(r, std::abs(e));
  return r;
}

/// Spectral norm (largest singular value), closed form via A^dag A.
inline double op_norm(const Mat2& a) {
  double tr = 0.0;
  for (const auto& e : a.m) tr += std::norm(e);
  const cplx det = a.m[0] * a.m[3] - a.m[1] * a.m[2];
  const double det2 = std::norm(det);
  const double half = 0.5 * tr;
  const double disc = std::max(0.0, half * half - det2);
  return std::sqrt(std::max(0.0, half + std::sqrt(disc)));
}

/// max-entry norm of U^dag U - I.
inline double unitarity_defect(const Mat2& u) {
  return max_abs(u.adjoint() * u - Mat2::identity());
}

}  // namespace agsq
