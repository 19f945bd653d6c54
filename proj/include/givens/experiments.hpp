// SPDX-License-Identifier: Apache-2.0
//
// Monte Carlo drivers: single-rotation accuracy, the (|f|,|g|) heatmap,
// products of singular values over 2x2 and 3x3 accumulations, and the
// log-normal forecast for those products.
//
// Work is split into fixed blocks (a block of samples, a heatmap cell, or one
// repetition), each drawing from its own substream. Per-block results are
// merged in block order, so the output does not depend on the thread count.
//
// Statistics are reported in units of the working format's unit roundoff.
#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "givens/algorithm.hpp"
#include "givens/rng_polar.hpp"
#include "givens/stats.hpp"

namespace givens::experiments {

inline constexpr int kHistogramBins = 101;
inline constexpr double kSigmaHistRange = 5.0;      // [-5u, 5u)
inline constexpr double kBackwardHistRange = 10.0;  // [0, 10u)
inline constexpr std::uint64_t kSamplesPerBlock = 1 << 16;

/// Runs fn(i) for i in [0, blocks) on `threads` workers (0 = hardware count).
void parallel_blocks(std::uint64_t blocks, unsigned threads,
                     const std::function<void(std::uint64_t)>& fn);

struct SingleAccuracy {
  ErrorStats sigma;     ///< sigma - 1
  ErrorStats backward;  ///< relative backward error
  Histogram sigma_hist{-kSigmaHistRange, kSigmaHistRange, kHistogramBins};
  Histogram backward_hist{0.0, kBackwardHistRange, kHistogramBins};
};

/// spec.samples random pairs through a complex generator.
template <std::floating_point T>
SingleAccuracy run_single_accuracy(AlgorithmId algo, const polar::ScenarioSpec& spec,
                                   unsigned threads = 1);

struct HeatmapCell {
  double log2_f;
  double log2_g;
  double sigma_err_avg;
};

/// Mean of sigma - 1 per (|f|, |g|) = (2^a, 2^b) cell over random phases.
/// Cells are ordered with log2_f as the outer loop.
template <std::floating_point T>
std::vector<HeatmapCell> run_heatmap(AlgorithmId algo, std::span<const double> log2_f,
                                     std::span<const double> log2_g,
                                     std::uint64_t samples_per_cell, std::uint64_t seed,
                                     unsigned threads = 1);

/// Forecast of Y = X_1 ... X_M from the mean and deviation of X.
/// Differences from 1 are carried separately so values near 1 keep their
/// digits.
struct AccumForecast {
  double mu_x;
  double mu_x_minus_one;
  double sigma_x;
  std::uint64_t M;
  double mu_y;
  double sigma_y;
  double mu_y_minus_one;
};

/// mu_Y = mu_X^M, sigma_Y = mu_X^M sqrt(exp(M (sigma_X/mu_X)^2) - 1), both
/// evaluated through log1p/expm1. Throws std::domain_error unless mu_X > 0,
/// sigma_X >= 0 and M >= 1.
AccumForecast predict_lognormal(double mu_x, double sigma_x, std::uint64_t M);

/// Same, taking mu_X - 1 directly; needed when mu_X - 1 is below the
/// resolution of binary64 around 1.
AccumForecast predict_lognormal_from_delta(double mu_x_minus_one, double sigma_x,
                                           std::uint64_t M);

struct Accum2Result {
  ErrorStats measured;        ///< prod(sigma_i) - 1 over the N repetitions
  ErrorStats single;          ///< sigma_i - 1 over all M N rotations
  AccumForecast forecast;     ///< from the measured single-rotation moments
  Histogram hist{-1.0, 1.0, kHistogramBins};
};

/// N repetitions of a product of M singular values, each from a fresh pair.
/// The product is accumulated as exp(sum log sigma_i) in reference_t<T>.
template <std::floating_point T>
Accum2Result run_accum2(AlgorithmId algo, std::uint64_t M, std::uint64_t N, std::uint64_t seed,
                        unsigned threads = 1);

/// Rows (1-based) rotated by step k >= 1: (1,2), (2,3), (1,3), repeating.
std::pair<int, int> schedule_3x3(std::uint64_t k);

struct Accum3Result {
  ErrorStats prod_sigma;    ///< prod(sigma_i) - 1
  ErrorStats norm_proxy;    ///< 1.5 (||V_M||_F / sqrt(3) - 1)
  ErrorStats orthogonality; ///< offdiag_avg(V_M)
  Histogram prod_sigma_hist{-1.0, 1.0, kHistogramBins};
  Histogram norm_proxy_hist{-1.0, 1.0, kHistogramBins};
  Histogram orthogonality_hist{0.0, 1.0, kHistogramBins};
};

/// N repetitions of V_M = Q_M ... Q_1 V_0 with V_0 = I and Q_k the computed
/// rotation embedded at schedule_3x3(k). Products are formed in
/// reference_t<T>.
template <std::floating_point T>
Accum3Result run_accum3(AlgorithmId algo, std::uint64_t M, std::uint64_t N, std::uint64_t seed,
                        unsigned threads = 1);

}  // namespace givens::experiments
