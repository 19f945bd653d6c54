// SPDX-License-Identifier: Apache-2.0
#include "givens/bench.hpp"

#include <algorithm>
#include <chrono>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#if defined(__linux__)
#include <sched.h>
#endif

#include "givens/rotation.hpp"

namespace givens::bench {

namespace {

constexpr std::pair<Kernel, std::string_view> kNames[] = {
    {Kernel::Noop, "noop"},
    {Kernel::Cplx39, "cplx39"},
    {Kernel::Cplx310, "cplx310"},
    {Kernel::CplxNew, "cplx_new"},
    {Kernel::Cplx39Cast, "cplx39_cast"},
    {Kernel::Cplx310Cast, "cplx310_cast"},
    {Kernel::CplxCast, "cplx_cast"},
};

template <std::floating_point T>
using Pair = std::pair<std::complex<T>, std::complex<T>>;

template <std::floating_point T>
T digest(const ComplexRotation<T>& rot) {
  return rot.c + rot.s.real() + rot.r.imag();
}

template <std::floating_point T, class Fn>
double best_ns_per_call(const std::vector<Pair<T>>& inputs, Fn&& fn) {
  using Clock = std::chrono::steady_clock;
  T acc = 0;
  for (const auto& [f, g] : inputs) acc += fn(f, g);
  double best = std::numeric_limits<double>::infinity();
  for (int pass = 0; pass < kTimedPasses; ++pass) {
    const auto start = Clock::now();
    for (const auto& [f, g] : inputs) acc += fn(f, g);
    const auto stop = Clock::now();
    best = std::min(best, std::chrono::duration<double, std::nano>(stop - start).count());
  }
  volatile T sink = acc;
  static_cast<void>(sink);
  return best / static_cast<double>(inputs.size());
}

template <std::floating_point T, class Generator>
auto widened(Generator&& gen) {
  using W = reference_t<T>;
  return [gen](std::complex<T> f, std::complex<T> g) {
    const std::complex<W> fw{f.real(), f.imag()};
    const std::complex<W> gw{g.real(), g.imag()};
    return digest(round_to<T>(gen(fw, gw)));
  };
}

template <std::floating_point T>
double time_kernel(Kernel k, const std::vector<Pair<T>>& inputs) {
  using W = reference_t<T>;
  switch (k) {
    case Kernel::Noop:
      return best_ns_per_call<T>(inputs, [](std::complex<T> f, std::complex<T>) {
        return f.real();
      });
    case Kernel::Cplx39:
      return best_ns_per_call<T>(
          inputs, [](std::complex<T> f, std::complex<T> g) { return digest(clartg39(f, g)); });
    case Kernel::Cplx310:
      return best_ns_per_call<T>(
          inputs, [](std::complex<T> f, std::complex<T> g) { return digest(clartg310(f, g)); });
    case Kernel::CplxNew:
      return best_ns_per_call<T>(
          inputs, [](std::complex<T> f, std::complex<T> g) { return digest(clartg_new(f, g)); });
    case Kernel::Cplx39Cast:
      return best_ns_per_call<T>(
          inputs, widened<T>([](std::complex<W> f, std::complex<W> g) { return clartg39(f, g); }));
    case Kernel::Cplx310Cast:
      return best_ns_per_call<T>(inputs, widened<T>([](std::complex<W> f, std::complex<W> g) {
                                   return clartg310(f, g);
                                 }));
    case Kernel::CplxCast:
      return best_ns_per_call<T>(inputs, widened<T>([](std::complex<W> f, std::complex<W> g) {
                                   return clartg_new(f, g);
                                 }));
  }
  throw std::invalid_argument("unknown bench kernel");
}

}  // namespace

std::string_view name_of(Kernel k) {
  for (const auto& [kernel, name] : kNames) {
    if (kernel == k) return name;
  }
  return "unknown";
}

Kernel parse_kernel(std::string_view name) {
  for (const auto& [kernel, kname] : kNames) {
    if (kname == name) return kernel;
  }
  throw std::invalid_argument("unknown bench kernel '" + std::string(name) + "'");
}

void pin_current_thread() {
#if defined(__linux__)
  cpu_set_t current;
  CPU_ZERO(&current);
  if (sched_getaffinity(0, sizeof current, &current) != 0) return;
  for (int cpu = 0; cpu < CPU_SETSIZE; ++cpu) {
    if (CPU_ISSET(cpu, &current)) {
      cpu_set_t one;
      CPU_ZERO(&one);
      CPU_SET(cpu, &one);
      sched_setaffinity(0, sizeof one, &one);
      return;
    }
  }
#endif
}

template <std::floating_point T>
std::vector<BenchRow> run_bench(std::span<const Kernel> kernels,
                                std::span<const polar::ScenarioSpec> scenarios,
                                std::uint64_t pairs_per_scenario, std::uint64_t seed) {
  for (const auto& spec : scenarios) polar::validate<T>(spec);
  std::vector<BenchRow> rows;
  rows.reserve(kernels.size() * scenarios.size());
  for (std::size_t i = 0; i < scenarios.size(); ++i) {
    const polar::ScenarioSpec& spec = scenarios[i];
    const std::uint64_t count = spec.samples != 0 ? spec.samples : pairs_per_scenario;
    if (count == 0) throw std::invalid_argument("bench: scenario with zero pairs");
    polar::Engine eng = polar::substream(seed, i);
    std::vector<Pair<T>> inputs;
    inputs.reserve(count);
    for (std::uint64_t j = 0; j < count; ++j) inputs.push_back(polar::sample_pair<T>(spec, eng));
    for (Kernel k : kernels) {
      rows.push_back({static_cast<int>(i + 1), k, time_kernel<T>(k, inputs)});
    }
  }
  return rows;
}

template std::vector<BenchRow> run_bench<float>(std::span<const Kernel>,
                                                std::span<const polar::ScenarioSpec>,
                                                std::uint64_t, std::uint64_t);
template std::vector<BenchRow> run_bench<double>(std::span<const Kernel>,
                                                 std::span<const polar::ScenarioSpec>,
                                                 std::uint64_t, std::uint64_t);

}  // namespace givens::bench
