// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

namespace givens {

/// Moments of an error sample. Standard deviations are population (1/n)
/// values, so a single sample has std 0.
struct ErrorStats {
  double avg = 0;
  double std = 0;
  double avg_abs = 0;
  double std_abs = 0;
  double max_abs = 0;
  std::uint64_t count = 0;
};

/// Streaming mean/variance of x and |x| (Welford), mergeable with Chan's
/// update. Merging the same partial results in the same order always gives
/// the same bits.
class RunningStats {
 public:
  void add(double x);
  void merge(const RunningStats& other);

  std::uint64_t count() const { return n_; }
  double mean() const { return mean_; }
  double stddev() const;
  ErrorStats result() const;

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0;
  double m2_ = 0;
  double mean_abs_ = 0;
  double m2_abs_ = 0;
  double max_abs_ = 0;
};

/// Equal-width bins over [lo, hi) plus an underflow bin (-inf, lo) and an
/// overflow bin [hi, inf).
class Histogram {
 public:
  struct Bin {
    double left;
    double right;
    std::uint64_t count;
  };

  Histogram(double lo, double hi, int bins);

  void add(double x);
  void merge(const Histogram& other);

  /// Underflow bin, the regular bins in order, then the overflow bin.
  std::vector<Bin> bins() const;
  std::uint64_t total() const;

 private:
  double lo_;
  double hi_;
  std::vector<std::uint64_t> counts_;  // [under, regular..., over]
};

}  // namespace givens
