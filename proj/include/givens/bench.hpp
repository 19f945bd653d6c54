// SPDX-License-Identifier: Apache-2.0
//
// Wall-clock timing of the complex generators over pre-generated inputs.
// Each (scenario, kernel) pair gets one untimed warm-up pass and three timed
// passes; the fastest pass is reported as nanoseconds per call.
#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "givens/rng_polar.hpp"

namespace givens::bench {

enum class Kernel {
  Noop,         ///< returns an input component; timing floor
  Cplx39,
  Cplx310,
  CplxNew,
  Cplx39Cast,   ///< 3.9 in reference_t<T>, rounded to T
  Cplx310Cast,  ///< 3.10 in reference_t<T>, rounded to T
  CplxCast,     ///< proposed algorithm in reference_t<T>, rounded to T
};

inline constexpr Kernel kDefaultKernels[] = {Kernel::Cplx39,     Kernel::Cplx310,
                                             Kernel::CplxNew,    Kernel::Cplx39Cast,
                                             Kernel::Cplx310Cast, Kernel::CplxCast};

std::string_view name_of(Kernel k);

/// Throws std::invalid_argument for an unknown name.
Kernel parse_kernel(std::string_view name);

struct BenchRow {
  int scenario;  ///< 1-based position in the scenario list
  Kernel kernel;
  double ns_per_call;
};

inline constexpr int kTimedPasses = 3;

/// Pins the calling thread to one CPU where the platform allows it.
void pin_current_thread();

/// For each scenario (outer) and kernel (inner): pairs_per_scenario inputs,
/// drawn from substream(seed, scenario index). A scenario's own `samples`
/// field, when non-zero, overrides pairs_per_scenario.
template <std::floating_point T>
std::vector<BenchRow> run_bench(std::span<const Kernel> kernels,
                                std::span<const polar::ScenarioSpec> scenarios,
                                std::uint64_t pairs_per_scenario, std::uint64_t seed);

}  // namespace givens::bench
