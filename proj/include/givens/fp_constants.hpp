// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <concepts>
#include <limits>

namespace givens {

/// Machine constants of one floating-point format.
///
/// safmin is the smallest positive normal number and safmax its reciprocal,
/// so safmin * safmax == 1 exactly. rtmin and rtmax bound the magnitudes
/// whose squares (and sums of two squares) stay in the normal range.
template <std::floating_point T>
struct FpConstants {
  T u;       ///< unit roundoff
  T safmin;
  T safmax;
  T rtmin;   ///< sqrt(safmin)
  T rtmax;   ///< sqrt(safmax / 2)
};

template <std::floating_point T>
FpConstants<T> make_fp_constants() {
  using lim = std::numeric_limits<T>;
  FpConstants<T> k{};
  k.u = lim::epsilon() / 2;
  k.safmin = lim::min();
  k.safmax = T(1) / k.safmin;
  k.rtmin = std::sqrt(k.safmin);
  k.rtmax = std::sqrt(k.safmax / 2);
  return k;
}

/// Safe to call during static initialisation of other translation units.
template <std::floating_point T>
const FpConstants<T>& fp_constants() {
  static const FpConstants<T> k = make_fp_constants<T>();
  return k;
}

/// Higher precision used to judge results computed in T.
template <std::floating_point T>
struct reference_of;
template <>
struct reference_of<float> {
  using type = double;
};
template <>
struct reference_of<double> {
  using type = long double;
};
template <std::floating_point T>
using reference_t = typename reference_of<T>::type;

/// True when reference_t<T> actually carries more digits than T.
template <std::floating_point T>
inline constexpr bool has_wider_reference =
    std::numeric_limits<reference_t<T>>::digits > std::numeric_limits<T>::digits;

}  // namespace givens
