// SPDX-License-Identifier: Apache-2.0
//
// Rotations evaluated in 100-digit arithmetic straight from the definition:
// c = |f| / ||(f,g)||, s = sign(f) conj(g) / ||(f,g)||, r = sign(f) ||(f,g)||.
#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <complex>

namespace oracle {

using Big = boost::multiprecision::cpp_bin_float_100;

struct BigComplex {
  Big re;
  Big im;
};

struct BigRotation {
  Big c;
  BigComplex s;
  BigComplex r;
};

template <class T>
BigRotation rotation(std::complex<T> f, std::complex<T> g) {
  const Big fr(f.real()), fi(f.imag()), gr(g.real()), gi(g.imag());
  const Big fa = sqrt(fr * fr + fi * fi);
  const Big norm = sqrt(fr * fr + fi * fi + gr * gr + gi * gi);
  const Big sr = fr / fa, si = fi / fa;  // sign(f)
  BigRotation out;
  out.c = fa / norm;
  // sign(f) * conj(g) / norm
  out.s = {(sr * gr + si * gi) / norm, (si * gr - sr * gi) / norm};
  out.r = {sr * norm, si * norm};
  return out;
}

inline Big abs(const BigComplex& z) { return sqrt(z.re * z.re + z.im * z.im); }

template <class T>
double rel_err(T computed, const Big& exact) {
  return static_cast<double>(boost::multiprecision::abs(Big(computed) - exact) /
                             boost::multiprecision::abs(exact));
}

template <class T>
double rel_err(std::complex<T> computed, const BigComplex& exact) {
  const BigComplex d{Big(computed.real()) - exact.re, Big(computed.imag()) - exact.im};
  return static_cast<double>(abs(d) / abs(exact));
}

}  // namespace oracle
