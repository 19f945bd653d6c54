// SPDX-License-Identifier: Apache-2.0
#include "givens/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace givens {

namespace {

void welford(std::uint64_t n, double x, double& mean, double& m2) {
  const double delta = x - mean;
  mean += delta / static_cast<double>(n);
  m2 += delta * (x - mean);
}

void chan(std::uint64_t na, std::uint64_t nb, double mean_b, double m2_b, double& mean,
          double& m2) {
  const double n = static_cast<double>(na + nb);
  const double delta = mean_b - mean;
  mean += delta * static_cast<double>(nb) / n;
  m2 += m2_b + delta * delta * static_cast<double>(na) * static_cast<double>(nb) / n;
}

}  // namespace

void RunningStats::add(double x) {
  ++n_;
  welford(n_, x, mean_, m2_);
  welford(n_, std::abs(x), mean_abs_, m2_abs_);
  max_abs_ = std::max(max_abs_, std::abs(x));
}

void RunningStats::merge(const RunningStats& other) {
  if (other.n_ == 0) return;
  if (n_ == 0) {
    *this = other;
    return;
  }
  chan(n_, other.n_, other.mean_, other.m2_, mean_, m2_);
  chan(n_, other.n_, other.mean_abs_, other.m2_abs_, mean_abs_, m2_abs_);
  n_ += other.n_;
  max_abs_ = std::max(max_abs_, other.max_abs_);
}

double RunningStats::stddev() const {
  return n_ == 0 ? 0.0 : std::sqrt(m2_ / static_cast<double>(n_));
}

ErrorStats RunningStats::result() const {
  ErrorStats s;
  s.count = n_;
  s.avg = mean_;
  s.std = stddev();
  s.avg_abs = mean_abs_;
  s.std_abs = n_ == 0 ? 0.0 : std::sqrt(m2_abs_ / static_cast<double>(n_));
  s.max_abs = max_abs_;
  return s;
}

Histogram::Histogram(double lo, double hi, int bins) : lo_(lo), hi_(hi) {
  if (!(lo < hi) || bins < 1) throw std::invalid_argument("Histogram: need lo < hi and bins >= 1");
  counts_.assign(static_cast<std::size_t>(bins) + 2, 0);
}

void Histogram::add(double x) {
  const std::size_t regular = counts_.size() - 2;
  if (std::isnan(x)) return;
  if (x < lo_) {
    ++counts_.front();
  } else if (x >= hi_) {
    ++counts_.back();
  } else {
    auto i = static_cast<std::size_t>((x - lo_) / (hi_ - lo_) * static_cast<double>(regular));
    ++counts_[1 + std::min(i, regular - 1)];
  }
}

void Histogram::merge(const Histogram& other) {
  if (other.counts_.size() != counts_.size() || other.lo_ != lo_ || other.hi_ != hi_) {
    throw std::invalid_argument("Histogram::merge: different binning");
  }
  for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
}

std::vector<Histogram::Bin> Histogram::bins() const {
  const double inf = std::numeric_limits<double>::infinity();
  const std::size_t regular = counts_.size() - 2;
  const double width = (hi_ - lo_) / static_cast<double>(regular);
  std::vector<Bin> out;
  out.reserve(counts_.size());
  out.push_back({-inf, lo_, counts_.front()});
  for (std::size_t i = 0; i < regular; ++i) {
    const double left = lo_ + width * static_cast<double>(i);
    const double right = i + 1 == regular ? hi_ : lo_ + width * static_cast<double>(i + 1);
    out.push_back({left, right, counts_[1 + i]});
  }
  out.push_back({hi_, inf, counts_.back()});
  return out;
}

std::uint64_t Histogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

}  // namespace givens
