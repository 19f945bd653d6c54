// SPDX-License-Identifier: Apache-2.0
//
// Givens rotation generators.
//
// Every generator returns (c, s, r) with
//
//   [     c      s ] [ f ]   [ r ]
//   [ -conj(s)   c ] [ g ] = [ 0 ].
//
// The complex kernels below reproduce the unscaled part of three lartg
// algorithms operation by operation: reordering any expression changes the
// rounding-error count the analysis relies on. The shared scale_wrapper
// brings arbitrary finite inputs into the range those kernels accept using
// power-of-two factors only, so it introduces no rounding of its own.
#pragma once

#include <algorithm>
#include <climits>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>

#include "givens/algorithm.hpp"
#include "givens/fp_constants.hpp"

namespace givens {

template <std::floating_point T>
struct RealRotation {
  T c;
  T s;
  T r;
};

/// Which internal branch of a generator produced a rotation.
///
/// main is the path the tightest worst-case bounds hold on. The meaning
/// of the other values depends on the algorithm:
///   Cplx39:  small_f = the "F is very small" case (f2 <= max(g2,1)*safmin)
///   Cplx310: alternate = p computed as 1/(sqrt(f2)*sqrt(h2))
///   CplxNew: alternate = s from r/h2; small_f = branch taken when
///            safmin*h2 > f2; small_f_alternate = same with r = f*(h2/d)
enum class Branch : std::uint8_t {
  main,
  alternate,
  small_f,
  small_f_alternate,
  f_zero,
  g_zero,
  invalid,
};

/// How scale_wrapper prepared the inputs before calling a kernel.
enum class Scaling : std::uint8_t {
  none,       ///< inputs passed through unchanged
  common,     ///< f and g multiplied by the same power of two
  reduced_f,  ///< |f| << |g|: f scaled further, c rescaled afterwards
  reduced_g,  ///< |g| << |f|: g scaled further, s rescaled afterwards
};

template <std::floating_point T>
struct ComplexRotation {
  T c;
  std::complex<T> s;
  std::complex<T> r;
  Branch branch = Branch::main;
  Scaling scaling = Scaling::none;
};

namespace detail {

template <class T>
inline T abssq(std::complex<T> z) {
  return z.real() * z.real() + z.imag() * z.imag();
}

template <class T>
inline T abs1(std::complex<T> z) {
  return std::max(std::abs(z.real()), std::abs(z.imag()));
}

template <class T>
inline std::complex<T> conjugate(std::complex<T> z) {
  return {z.real(), -z.imag()};
}

// (a.re + i a.im)(b.re + i b.im) with the textbook four products; std::complex
// is avoided so the operation order is fixed.
template <class T>
inline std::complex<T> times(std::complex<T> a, std::complex<T> b) {
  return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <class T>
inline std::complex<T> times(std::complex<T> a, T t) {
  return {a.real() * t, a.imag() * t};
}

template <class T>
inline std::complex<T> over(std::complex<T> a, T t) {
  return {a.real() / t, a.imag() / t};
}

template <class T>
inline std::complex<T> ldexp(std::complex<T> z, int e) {
  return {std::ldexp(z.real(), e), std::ldexp(z.imag(), e)};
}

template <class T>
inline bool finite(std::complex<T> z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <class T>
ComplexRotation<T> nan_rotation() {
  const T nan = std::numeric_limits<T>::quiet_NaN();
  return {nan, {nan, nan}, {nan, nan}, Branch::invalid, Scaling::none};
}

template <class T>
ComplexRotation<T> g_zero_rotation(std::complex<T> f) {
  return {T(1), {}, f, Branch::g_zero, Scaling::none};
}

// c = 0, s = sign(conj(g)), r = |g|. |g| is formed on a copy of g scaled to
// unit exponent, which is exact, so neither overflow nor underflow can occur.
template <class T>
ComplexRotation<T> f_zero_rotation(std::complex<T> g) {
  const int e = std::ilogb(abs1(g));
  const std::complex<T> gs = ldexp(g, -e);
  const T d = std::hypot(gs.real(), gs.imag());
  return {T(0), {gs.real() / d, -gs.imag() / d}, {std::ldexp(d, e), T(0)}, Branch::f_zero,
          Scaling::none};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Real arithmetic
// ---------------------------------------------------------------------------

namespace unscaled {

// r = sqrt(f^2+g^2), c = f/r, s = g/r, then the sign is flipped when the
// larger component is f and c came out negative.
template <std::floating_point T>
RealRotation<T> real39(T f, T g) {
  T r = std::sqrt(f * f + g * g);
  T c = f / r;
  T s = g / r;
  if (std::abs(f) > std::abs(g) && c < T(0)) {
    c = -c;
    s = -s;
    r = -r;
  }
  return {c, s, r};
}

// p = 1/d with the sign of f carried by s and r.
template <std::floating_point T>
RealRotation<T> real310(T f, T g) {
  const T d = std::sqrt(f * f + g * g);
  const T p = T(1) / d;
  const T c = std::abs(f) * p;
  const T s = g * std::copysign(p, f);
  const T r = std::copysign(d, f);
  return {c, s, r};
}

template <std::floating_point T>
RealRotation<T> real_higham(T f, T g) {
  const T d = std::sqrt(f * f + g * g);
  return {f / d, g / d, d};
}

}  // namespace unscaled

/// Real rotation for one of the three sign conventions.
///
/// g == 0 gives (1, 0, f) and f == 0 gives (0, 1, g) for every variant.
/// Inputs whose larger magnitude lies outside [rtmin, rtmax] are scaled by a
/// power of two first.
template <std::floating_point T>
RealRotation<T> lartg_real(AlgorithmId variant, T f, T g,
                           const FpConstants<T>& k = fp_constants<T>()) {
  if (std::isnan(f) || std::isnan(g)) {
    const T nan = std::numeric_limits<T>::quiet_NaN();
    return {nan, nan, nan};
  }
  if (g == T(0)) return {T(1), T(0), f};
  if (f == T(0)) return {T(0), T(1), g};

  auto kernel = [variant](T a, T b) {
    switch (variant) {
      case AlgorithmId::Real39: return unscaled::real39(a, b);
      case AlgorithmId::Real310: return unscaled::real310(a, b);
      case AlgorithmId::RealHigham: return unscaled::real_higham(a, b);
      default: break;
    }
    const T nan = std::numeric_limits<T>::quiet_NaN();
    return RealRotation<T>{nan, nan, nan};
  };

  const T m = std::max(std::abs(f), std::abs(g));
  if (m >= k.rtmin && m <= k.rtmax) return kernel(f, g);
  const int e = std::ilogb(m);
  RealRotation<T> rot = kernel(std::ldexp(f, -e), std::ldexp(g, -e));
  rot.r = std::ldexp(rot.r, e);
  return rot;
}

// ---------------------------------------------------------------------------
// Complex arithmetic: unscaled kernels. Preconditions: f != 0, g != 0 and
// every component magnitude of max(|Re|,|Im|) within [rtmin, rtmax].
// ---------------------------------------------------------------------------

namespace unscaled {

template <std::floating_point T>
ComplexRotation<T> cplx39(std::complex<T> f, std::complex<T> g,
                          const FpConstants<T>& k = fp_constants<T>()) {
  using detail::abssq;
  using detail::conjugate;
  using detail::times;
  const T f2 = abssq(f);
  const T g2 = abssq(g);
  if (f2 <= std::max(g2, T(1)) * k.safmin) {
    // F is very small relative to G: c = |f|/|g| to working precision.
    const T f2s = std::hypot(f.real(), f.imag());
    const T g2s = std::sqrt(g2);
    const T c = f2s / g2s;
    std::complex<T> ff;
    if (detail::abs1(f) > T(1)) {
      const T d = std::hypot(f.real(), f.imag());
      ff = {f.real() / d, f.imag() / d};
    } else {
      // Power-of-two lift so |f| is not subnormal before normalising.
      constexpr int lift = (std::numeric_limits<T>::digits - std::numeric_limits<T>::min_exponent) / 2;
      const T dr = std::ldexp(f.real(), lift);
      const T di = std::ldexp(f.imag(), lift);
      const T d = std::hypot(dr, di);
      ff = {dr / d, di / d};
    }
    const std::complex<T> s = times(ff, std::complex<T>{g.real() / g2s, -g.imag() / g2s});
    const std::complex<T> cf = times(f, c);
    const std::complex<T> sg = times(s, g);
    return {c, s, {cf.real() + sg.real(), cf.imag() + sg.imag()}, Branch::small_f, Scaling::none};
  }
  const T f2s = std::sqrt(T(1) + g2 / f2);
  const std::complex<T> r = times(f, f2s);
  const T c = T(1) / f2s;
  const T d = f2 + g2;
  const std::complex<T> sn{r.real() / d, r.imag() / d};
  const std::complex<T> s = times(sn, conjugate(g));
  return {c, s, r, Branch::main, Scaling::none};
}

template <std::floating_point T>
ComplexRotation<T> cplx310(std::complex<T> f, std::complex<T> g,
                           const FpConstants<T>& k = fp_constants<T>()) {
  using detail::abssq;
  using detail::conjugate;
  using detail::times;
  const T f2 = abssq(f);
  const T g2 = abssq(g);
  const T h2 = f2 + g2;
  T d;
  Branch branch;
  if (f2 > k.rtmin && h2 < k.rtmax) {
    d = std::sqrt(f2 * h2);
    branch = Branch::main;
  } else {
    d = std::sqrt(f2) * std::sqrt(h2);
    branch = Branch::alternate;
  }
  const T p = T(1) / d;
  const T c = f2 * p;
  const std::complex<T> s = times(conjugate(g), times(f, p));
  const std::complex<T> r = times(f, h2 * p);
  return {c, s, r, branch, Scaling::none};
}

template <std::floating_point T>
ComplexRotation<T> cplx_new(std::complex<T> f, std::complex<T> g,
                            const FpConstants<T>& k = fp_constants<T>()) {
  using detail::abssq;
  using detail::conjugate;
  using detail::over;
  using detail::times;
  const T f2 = abssq(f);
  const T g2 = abssq(g);
  const T h2 = f2 + g2;
  if (k.safmin * h2 <= f2) {
    // safmin <= f2/h2 <= 1
    const T c = std::sqrt(f2 / h2);
    const std::complex<T> r = over(f, c);
    if (f2 > k.rtmin && h2 < k.rtmax) {
      const std::complex<T> s = times(conjugate(g), over(f, std::sqrt(f2 * h2)));
      return {c, s, r, Branch::main, Scaling::none};
    }
    const std::complex<T> s = times(conjugate(g), over(r, h2));
    return {c, s, r, Branch::alternate, Scaling::none};
  }
  // f2/h2 < safmin: h2 == g2 to working precision and sqrt(f2*h2) is safe.
  const T d = std::sqrt(f2 * h2);
  const T c = f2 / d;
  const std::complex<T> s = times(conjugate(g), over(f, d));
  if (c > k.safmin) return {c, s, over(f, c), Branch::small_f, Scaling::none};
  return {c, s, times(f, h2 / d), Branch::small_f_alternate, Scaling::none};
}

}  // namespace unscaled

/// Runs an unscaled kernel on arbitrary finite (f, g).
///
/// Zero inputs take the closed-form paths. When max(|Re|,|Im|) of f or g
/// falls outside [rtmin, rtmax], both inputs are multiplied by 2^-e where 2^e
/// is the leading power of two of the larger one, and r is multiplied back.
/// If the smaller input would still sit below rtmin its magnitude ratio to
/// the larger is under rtmin, so c (when f is small) or s (when g is small)
/// is linear in it to working precision: it is lifted to 2^-(digits+1)
/// relative to the larger, the kernel runs, and that output is scaled back.
template <std::floating_point T, class Kernel>
ComplexRotation<T> scale_wrapper(Kernel&& inner, std::complex<T> f, std::complex<T> g,
                                 const FpConstants<T>& k = fp_constants<T>()) {
  if (!detail::finite(f) || !detail::finite(g)) return detail::nan_rotation<T>();
  if (g == std::complex<T>{}) return detail::g_zero_rotation(f);
  if (f == std::complex<T>{}) return detail::f_zero_rotation(g);

  const T fmax = detail::abs1(f);
  const T gmax = detail::abs1(g);
  const auto in_range = [&k](T x) { return x >= k.rtmin && x <= k.rtmax; };
  if (in_range(fmax) && in_range(gmax)) return inner(f, g);

  const int ef = std::ilogb(fmax);
  const int eg = std::ilogb(gmax);
  const int top = std::max(ef, eg);
  const int floor_exp = std::ilogb(k.rtmin);
  const int lifted = -(std::numeric_limits<T>::digits + 1);

  int shift_f = -top;
  int shift_g = -top;
  Scaling mode = Scaling::common;
  if (ef - top < floor_exp) {
    shift_f = lifted - ef;
    mode = Scaling::reduced_f;
  } else if (eg - top < floor_exp) {
    shift_g = lifted - eg;
    mode = Scaling::reduced_g;
  }

  ComplexRotation<T> rot = inner(detail::ldexp(f, shift_f), detail::ldexp(g, shift_g));
  rot.scaling = mode;
  if (mode == Scaling::reduced_f) rot.c = std::ldexp(rot.c, -(shift_f + top));
  if (mode == Scaling::reduced_g) rot.s = detail::ldexp(rot.s, -(shift_g + top));
  rot.r = detail::ldexp(rot.r, top);
  return rot;
}

/// Zero handling around an unscaled kernel, without range scaling.
template <std::floating_point T, class Kernel>
ComplexRotation<T> with_zero_paths(Kernel&& inner, std::complex<T> f, std::complex<T> g) {
  if (g == std::complex<T>{}) return detail::g_zero_rotation(f);
  if (f == std::complex<T>{}) return detail::f_zero_rotation(g);
  return inner(f, g);
}

template <std::floating_point T>
ComplexRotation<T> lartg_cplx_v39(std::complex<T> f, std::complex<T> g) {
  return with_zero_paths([](auto a, auto b) { return unscaled::cplx39<T>(a, b); }, f, g);
}

template <std::floating_point T>
ComplexRotation<T> lartg_cplx_v310(std::complex<T> f, std::complex<T> g) {
  return with_zero_paths([](auto a, auto b) { return unscaled::cplx310<T>(a, b); }, f, g);
}

template <std::floating_point T>
ComplexRotation<T> lartg_cplx_new(std::complex<T> f, std::complex<T> g) {
  return with_zero_paths([](auto a, auto b) { return unscaled::cplx_new<T>(a, b); }, f, g);
}

/// Full-range generators (zero paths + scaling).
template <std::floating_point T>
ComplexRotation<T> clartg39(std::complex<T> f, std::complex<T> g) {
  return scale_wrapper([](auto a, auto b) { return unscaled::cplx39<T>(a, b); }, f, g);
}

template <std::floating_point T>
ComplexRotation<T> clartg310(std::complex<T> f, std::complex<T> g) {
  return scale_wrapper([](auto a, auto b) { return unscaled::cplx310<T>(a, b); }, f, g);
}

template <std::floating_point T>
ComplexRotation<T> clartg_new(std::complex<T> f, std::complex<T> g) {
  return scale_wrapper([](auto a, auto b) { return unscaled::cplx_new<T>(a, b); }, f, g);
}

/// Rounds a rotation computed in a wider format to T (round to nearest even).
template <std::floating_point T, std::floating_point W>
ComplexRotation<T> round_to(const ComplexRotation<W>& w) {
  return {static_cast<T>(w.c),
          {static_cast<T>(w.s.real()), static_cast<T>(w.s.imag())},
          {static_cast<T>(w.r.real()), static_cast<T>(w.r.imag())},
          w.branch,
          w.scaling};
}

/// The proposed algorithm run in reference_t<T> on the promoted inputs, with
/// the outputs rounded back to T.
template <std::floating_point T>
ComplexRotation<T> lartg_cplx_cast(std::complex<T> f, std::complex<T> g) {
  using W = reference_t<T>;
  const std::complex<W> fw{f.real(), f.imag()};
  const std::complex<W> gw{g.real(), g.imag()};
  return round_to<T>(clartg_new<W>(fw, gw));
}

/// Dispatch on a complex AlgorithmId; real ids yield a NaN rotation.
template <std::floating_point T>
ComplexRotation<T> generate(AlgorithmId id, std::complex<T> f, std::complex<T> g) {
  switch (id) {
    case AlgorithmId::Cplx39: return clartg39(f, g);
    case AlgorithmId::Cplx310: return clartg310(f, g);
    case AlgorithmId::CplxNew: return clartg_new(f, g);
    case AlgorithmId::CplxCast: return lartg_cplx_cast(f, g);
    default: break;
  }
  return detail::nan_rotation<T>();
}

}  // namespace givens
