// SPDX-License-Identifier: Apache-2.0
//
// Quality measures of a computed rotation. Everything here is evaluated in
// reference_t<T>; results "in units of u" are divided by the unit roundoff of
// the working format T.
#pragma once

#include <array>
#include <complex>

#include "givens/rotation.hpp"

namespace givens::metrics {

/// sqrt(c^2 + |s|^2), the only singular value of [c s; -conj(s) c].
template <std::floating_point T>
reference_t<T> sigma(const ComplexRotation<T>& rot);

/// sigma(rot) - 1 without the cancellation of forming sigma first.
template <std::floating_point T>
reference_t<T> sigma_minus_one(const ComplexRotation<T>& rot);

/// ||Q^H (r, 0)^T - (f, g)^T||_2 / ||(f, g)||_2. Throws std::domain_error for
/// f = g = 0.
template <std::floating_point T>
reference_t<T> backward_error(const ComplexRotation<T>& rot, std::complex<T> f,
                              std::complex<T> g);

/// Relative errors of c, s and r, in units of u, against the proposed
/// algorithm evaluated in reference_t<T> on the same inputs.
struct ComponentErrors {
  double c;
  double s;
  double r;
};

template <std::floating_point T>
ComponentErrors component_rel_errors(const ComplexRotation<T>& rot, std::complex<T> f,
                                     std::complex<T> g);

/// Same, against a caller-supplied oracle.
template <std::floating_point T>
ComponentErrors component_rel_errors(const ComplexRotation<T>& rot,
                                     const ComplexRotation<reference_t<T>>& oracle);

struct RotationQuality {
  double sigma_err;     ///< (sigma - 1) / u
  double backward_err;  ///< relative backward error / u
  double c_relerr;
  double s_relerr;
  double r_relerr;
};

template <std::floating_point T>
RotationQuality quality(const ComplexRotation<T>& rot, std::complex<T> f, std::complex<T> g);

template <class R>
using Matrix3T = std::array<std::array<std::complex<R>, 3>, 3>;
using Matrix3 = Matrix3T<double>;

template <class R = double>
Matrix3T<R> identity3() {
  Matrix3T<R> m{};
  for (int i = 0; i < 3; ++i) m[i][i] = R(1);
  return m;
}

/// Mean of |S_ij| over the six off-diagonal entries of S = m^H m.
template <class R>
R offdiag_avg(const Matrix3T<R>& m) {
  R total = 0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      std::complex<R> sij{};
      for (int k = 0; k < 3; ++k) sij += std::conj(m[k][i]) * m[k][j];
      total += std::abs(sij);
    }
  }
  return total / R(6);
}

/// ||m||_F
template <class R>
R frobenius(const Matrix3T<R>& m) {
  R sum = 0;
  for (const auto& row : m) {
    for (const auto& x : row) sum += std::norm(x);
  }
  return std::sqrt(sum);
}

}  // namespace givens::metrics
