// SPDX-License-Identifier: Apache-2.0
//
// Random (f, g) pairs in polar form: angles uniform in [0, 2 pi), log2 of the
// moduli uniform in a configurable exponent range.
//
// The generator is std::mt19937_64. Sample block i of a run with seed S draws
// from its own engine seeded with S ^ i, so the samples of a run do not
// depend on how blocks are spread across threads.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "givens/fp_constants.hpp"

namespace givens::polar {

struct RhoRange {
  double min;
  double max;
  bool operator==(const RhoRange&) const = default;
};

struct ScenarioSpec {
  RhoRange rho_f;
  RhoRange rho_g;
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
};

using Engine = std::mt19937_64;

/// Engine for sample block `index` of a run seeded with `seed`.
inline Engine substream(std::uint64_t seed, std::uint64_t index) { return Engine(seed ^ index); }

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

/// (-rho_max, rho_max) with rho_max = (min(1 - emin, emax - 1) - digits + 1)/2 - 1,
/// which keeps every generated pair on the unscaled path of the kernels.
template <std::floating_point T>
constexpr RhoRange default_rho() {
  using lim = std::numeric_limits<T>;
  const double safmax_exp = std::min(1 - lim::min_exponent, lim::max_exponent - 1);
  const double rho_max = (safmax_exp - lim::digits + 1) / 2.0 - 1.0;
  return {-rho_max, rho_max};
}

/// Throws std::invalid_argument unless min <= max and 2^min, 2^max are finite,
/// nonzero values of T.
template <std::floating_point T>
void validate(const ScenarioSpec& spec);

/// m (cos(angle), sin(angle)) with the trigonometric values rounded to T
/// before the product, as the reference listing does.
template <std::floating_point T>
std::complex<T> from_polar(T modulus, double angle) {
  return {modulus * static_cast<T>(std::cos(angle)), modulus * static_cast<T>(std::sin(angle))};
}

template <std::floating_point T>
T modulus_from(RhoRange rho, double unit) {
  return static_cast<T>(std::exp2(rho.min + (rho.max - rho.min) * unit));
}

/// Draws theta, phi, then the two moduli, in that order.
template <std::floating_point T>
std::pair<std::complex<T>, std::complex<T>> sample_pair(const ScenarioSpec& spec, Engine& eng) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  const double theta = uniform01(eng) * two_pi;
  const double phi = uniform01(eng) * two_pi;
  const T r1 = modulus_from<T>(spec.rho_f, uniform01(eng));
  const T r2 = modulus_from<T>(spec.rho_g, uniform01(eng));
  return {from_polar(r1, theta), from_polar(r2, theta + phi)};
}

/// The seven (rho_f, rho_g) timing scenarios for binary32.
std::vector<ScenarioSpec> default_scenarios();

/// Parses lines of `rho_f_min,rho_f_max,rho_g_min,rho_g_max`. Blank lines and
/// lines starting with '#' are skipped. Throws std::invalid_argument with the
/// line number on malformed input.
std::vector<ScenarioSpec> parse_scenarios(std::istream& in);

/// Throws std::runtime_error if the file cannot be opened.
std::vector<ScenarioSpec> read_scenario_file(const std::string& path);

}  // namespace givens::polar
