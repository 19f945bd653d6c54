// SPDX-License-Identifier: Apache-2.0
#include "givens/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace givens::metrics {

namespace {

// Neumaier summation; the terms passed here are exact squares, so the result
// is the correctly rounded sum in all but pathological cases.
template <class R, std::size_t N>
R compensated_sum(const std::array<R, N>& terms) {
  R sum = 0;
  R comp = 0;
  for (R t : terms) {
    const R next = sum + t;
    if (std::abs(sum) >= std::abs(t)) {
      comp += (sum - next) + t;
    } else {
      comp += (t - next) + sum;
    }
    sum = next;
  }
  return sum + comp;
}

template <class R>
R norm2(std::complex<R> a, std::complex<R> b) {
  const R scale = std::max({std::abs(a.real()), std::abs(a.imag()), std::abs(b.real()),
                            std::abs(b.imag())});
  if (scale == R(0)) return R(0);
  const int e = std::ilogb(scale);
  const auto sq = [e](R x) {
    const R y = std::ldexp(x, -e);
    return y * y;
  };
  return std::ldexp(std::sqrt(sq(a.real()) + sq(a.imag()) + sq(b.real()) + sq(b.imag())), e);
}

template <class R>
R rel_err(std::complex<R> computed, std::complex<R> exact) {
  return std::abs(computed - exact) / std::abs(exact);
}

template <class R, class T>
std::complex<R> widen(std::complex<T> z) {
  return {static_cast<R>(z.real()), static_cast<R>(z.imag())};
}

}  // namespace

template <std::floating_point T>
reference_t<T> sigma(const ComplexRotation<T>& rot) {
  using R = reference_t<T>;
  const R c = rot.c;
  const R sr = rot.s.real();
  const R si = rot.s.imag();
  return std::sqrt(c * c + sr * sr + si * si);
}

template <std::floating_point T>
reference_t<T> sigma_minus_one(const ComplexRotation<T>& rot) {
  using R = reference_t<T>;
  const R c = rot.c;
  const R sr = rot.s.real();
  const R si = rot.s.imag();
  const R q_minus_one = compensated_sum(std::array<R, 4>{R(-1), c * c, sr * sr, si * si});
  return q_minus_one / (R(1) + std::sqrt(R(1) + q_minus_one));
}

template <std::floating_point T>
reference_t<T> backward_error(const ComplexRotation<T>& rot, std::complex<T> f,
                              std::complex<T> g) {
  using R = reference_t<T>;
  const std::complex<R> fw = widen<R>(f);
  const std::complex<R> gw = widen<R>(g);
  const R denom = norm2(fw, gw);
  if (denom == R(0)) throw std::domain_error("backward_error: (f, g) = (0, 0)");
  const R c = rot.c;
  const std::complex<R> s = widen<R>(rot.s);
  const std::complex<R> r = widen<R>(rot.r);
  const std::complex<R> top = c * r - fw;
  const std::complex<R> bottom = std::conj(s) * r - gw;
  return norm2(top, bottom) / denom;
}

template <std::floating_point T>
ComponentErrors component_rel_errors(const ComplexRotation<T>& rot,
                                     const ComplexRotation<reference_t<T>>& oracle) {
  using R = reference_t<T>;
  if (oracle.c == R(0) || oracle.s == std::complex<R>{}) {
    throw std::domain_error("component_rel_errors: oracle c or s is zero");
  }
  const R u = fp_constants<T>().u;
  ComponentErrors e{};
  e.c = static_cast<double>(std::abs(R(rot.c) - oracle.c) / oracle.c / u);
  e.s = static_cast<double>(rel_err(widen<R>(rot.s), oracle.s) / u);
  e.r = static_cast<double>(rel_err(widen<R>(rot.r), oracle.r) / u);
  return e;
}

template <std::floating_point T>
ComponentErrors component_rel_errors(const ComplexRotation<T>& rot, std::complex<T> f,
                                     std::complex<T> g) {
  using R = reference_t<T>;
  return component_rel_errors(rot, clartg_new<R>(widen<R>(f), widen<R>(g)));
}

template <std::floating_point T>
RotationQuality quality(const ComplexRotation<T>& rot, std::complex<T> f, std::complex<T> g) {
  const double u = static_cast<double>(fp_constants<T>().u);
  const ComponentErrors e = component_rel_errors(rot, f, g);
  return {static_cast<double>(sigma_minus_one(rot)) / u,
          static_cast<double>(backward_error(rot, f, g)) / u, e.c, e.s, e.r};
}

#define GIVENS_INSTANTIATE(T)                                                                     \
  template reference_t<T> sigma(const ComplexRotation<T>&);                                       \
  template reference_t<T> sigma_minus_one(const ComplexRotation<T>&);                             \
  template reference_t<T> backward_error(const ComplexRotation<T>&, std::complex<T>,              \
                                         std::complex<T>);                                        \
  template ComponentErrors component_rel_errors(const ComplexRotation<T>&,                        \
                                                const ComplexRotation<reference_t<T>>&);          \
  template ComponentErrors component_rel_errors(const ComplexRotation<T>&, std::complex<T>,       \
                                                std::complex<T>);                                 \
  template RotationQuality quality(const ComplexRotation<T>&, std::complex<T>, std::complex<T>);

GIVENS_INSTANTIATE(float)
GIVENS_INSTANTIATE(double)

#undef GIVENS_INSTANTIATE

}  // namespace givens::metrics
