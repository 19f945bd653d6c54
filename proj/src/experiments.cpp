// SPDX-License-Identifier: Apache-2.0
#include "givens/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "givens/metrics.hpp"
#include "givens/rotation.hpp"

namespace givens::experiments {

namespace {

void require_complex(AlgorithmId algo) {
  if (!is_complex(algo)) {
    throw std::invalid_argument("experiment needs a complex algorithm, got " +
                                std::string(name_of(algo)));
  }
}

template <class R>
class NeumaierSum {
 public:
  void add(R x) {
    const R next = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - next) + x;
    } else {
      comp_ += (x - next) + sum_;
    }
    sum_ = next;
  }
  R value() const { return sum_ + comp_; }

 private:
  R sum_ = 0;
  R comp_ = 0;
};

Histogram centered_histogram(double center, double half_width) {
  if (!(half_width > 0) || !std::isfinite(half_width)) half_width = 1.0;
  return Histogram(center - half_width, center + half_width, kHistogramBins);
}

Histogram spanning_histogram(const std::vector<double>& values) {
  if (values.empty()) return Histogram(-1.0, 1.0, kHistogramBins);
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double pad = hi > lo ? (hi - lo) / (2.0 * (kHistogramBins - 1)) : 0.0;
  if (pad == 0.0) return centered_histogram(lo, std::max(1.0, std::abs(lo)));
  return Histogram(lo - pad, hi + pad, kHistogramBins);
}

template <class R>
using Matrix = metrics::Matrix3T<R>;

// Rows I and J of v become c v_I + s v_J and -conj(s) v_I + c v_J.
template <class R, std::floating_point T>
void rotate_rows(Matrix<R>& v, int i, int j, const ComplexRotation<T>& rot) {
  const R c = rot.c;
  const std::complex<R> s{static_cast<R>(rot.s.real()), static_cast<R>(rot.s.imag())};
  const std::complex<R> minus_conj_s = -std::conj(s);
  for (int k = 0; k < 3; ++k) {
    const std::complex<R> a = v[i][k];
    const std::complex<R> b = v[j][k];
    v[i][k] = c * a + s * b;
    v[j][k] = minus_conj_s * a + c * b;
  }
}

// ||v||_F / sqrt(3) - 1 without forming the cancelling difference directly.
template <class R>
R frobenius_over_sqrt3_minus_one(const Matrix<R>& v) {
  NeumaierSum<R> sum;
  sum.add(R(-3));
  for (const auto& row : v) {
    for (const auto& x : row) {
      sum.add(x.real() * x.real());
      sum.add(x.imag() * x.imag());
    }
  }
  const R q_minus_one = sum.value() / R(3);
  return q_minus_one / (R(1) + std::sqrt(R(1) + q_minus_one));
}

}  // namespace

void parallel_blocks(std::uint64_t blocks, unsigned threads,
                     const std::function<void(std::uint64_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const auto workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, blocks));
  if (workers <= 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto work = [&] {
    for (;;) {
      const std::uint64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      try {
        fn(b);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(blocks);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <std::floating_point T>
SingleAccuracy run_single_accuracy(AlgorithmId algo, const polar::ScenarioSpec& spec,
                                   unsigned threads) {
  require_complex(algo);
  polar::validate<T>(spec);
  const double u = static_cast<double>(fp_constants<T>().u);
  const std::uint64_t blocks = (spec.samples + kSamplesPerBlock - 1) / kSamplesPerBlock;

  struct Partial {
    RunningStats sigma;
    RunningStats backward;
    SingleAccuracy hists;
  };
  std::vector<Partial> partials(blocks);

  parallel_blocks(blocks, threads, [&](std::uint64_t b) {
    polar::Engine eng = polar::substream(spec.seed, b);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min(spec.samples, begin + kSamplesPerBlock);
    Partial& p = partials[b];
    for (std::uint64_t i = begin; i < end; ++i) {
      const auto [f, g] = polar::sample_pair<T>(spec, eng);
      const ComplexRotation<T> rot = generate<T>(algo, f, g);
      const double se = static_cast<double>(metrics::sigma_minus_one(rot)) / u;
      const double be = static_cast<double>(metrics::backward_error(rot, f, g)) / u;
      p.sigma.add(se);
      p.backward.add(be);
      p.hists.sigma_hist.add(se);
      p.hists.backward_hist.add(be);
    }
  });

  SingleAccuracy out;
  RunningStats sigma;
  RunningStats backward;
  for (const Partial& p : partials) {
    sigma.merge(p.sigma);
    backward.merge(p.backward);
    out.sigma_hist.merge(p.hists.sigma_hist);
    out.backward_hist.merge(p.hists.backward_hist);
  }
  out.sigma = sigma.result();
  out.backward = backward.result();
  return out;
}

template <std::floating_point T>
std::vector<HeatmapCell> run_heatmap(AlgorithmId algo, std::span<const double> log2_f,
                                     std::span<const double> log2_g,
                                     std::uint64_t samples_per_cell, std::uint64_t seed,
                                     unsigned threads) {
  require_complex(algo);
  if (samples_per_cell == 0) throw std::invalid_argument("heatmap: samples_per_cell must be > 0");
  const double u = static_cast<double>(fp_constants<T>().u);
  const std::uint64_t cols = log2_g.size();
  std::vector<HeatmapCell> cells(log2_f.size() * cols);
  for (std::uint64_t i = 0; i < log2_f.size(); ++i) {
    for (std::uint64_t j = 0; j < cols; ++j) cells[i * cols + j] = {log2_f[i], log2_g[j], 0.0};
  }
  for (const HeatmapCell& cell : cells) {
    polar::validate<T>({{cell.log2_f, cell.log2_f}, {cell.log2_g, cell.log2_g}, 1, seed});
  }

  parallel_blocks(cells.size(), threads, [&](std::uint64_t c) {
    HeatmapCell& cell = cells[c];
    const polar::ScenarioSpec spec{
        {cell.log2_f, cell.log2_f}, {cell.log2_g, cell.log2_g}, samples_per_cell, seed};
    polar::Engine eng = polar::substream(seed, c);
    RunningStats stats;
    for (std::uint64_t i = 0; i < samples_per_cell; ++i) {
      const auto [f, g] = polar::sample_pair<T>(spec, eng);
      stats.add(static_cast<double>(metrics::sigma_minus_one(generate<T>(algo, f, g))) / u);
    }
    cell.sigma_err_avg = stats.mean();
  });
  return cells;
}

AccumForecast predict_lognormal_from_delta(double mu_x_minus_one, double sigma_x,
                                           std::uint64_t M) {
  if (!(mu_x_minus_one > -1.0) || !std::isfinite(mu_x_minus_one)) {
    throw std::domain_error("predict_lognormal: mu_X must be positive and finite");
  }
  if (!(sigma_x >= 0.0) || !std::isfinite(sigma_x)) {
    throw std::domain_error("predict_lognormal: sigma_X must be non-negative and finite");
  }
  if (M == 0) throw std::domain_error("predict_lognormal: M must be >= 1");
  const double m = static_cast<double>(M);
  const double mu_x = 1.0 + mu_x_minus_one;
  const double log_mu_y = m * std::log1p(mu_x_minus_one);
  const double ratio = sigma_x / mu_x;
  AccumForecast out{};
  out.mu_x = mu_x;
  out.mu_x_minus_one = mu_x_minus_one;
  out.sigma_x = sigma_x;
  out.M = M;
  out.mu_y = std::exp(log_mu_y);
  out.mu_y_minus_one = std::expm1(log_mu_y);
  out.sigma_y = out.mu_y * std::sqrt(std::expm1(m * ratio * ratio));
  return out;
}

AccumForecast predict_lognormal(double mu_x, double sigma_x, std::uint64_t M) {
  if (!(mu_x > 0.0)) throw std::domain_error("predict_lognormal: mu_X must be positive");
  return predict_lognormal_from_delta(mu_x - 1.0, sigma_x, M);
}

template <std::floating_point T>
Accum2Result run_accum2(AlgorithmId algo, std::uint64_t M, std::uint64_t N, std::uint64_t seed,
                        unsigned threads) {
  require_complex(algo);
  if (M == 0 || N == 0) throw std::invalid_argument("accum2: M and N must be >= 1");
  using R = reference_t<T>;
  const double u = static_cast<double>(fp_constants<T>().u);
  const polar::ScenarioSpec spec{polar::default_rho<T>(), polar::default_rho<T>(), M, seed};

  std::vector<double> products(N);
  std::vector<RunningStats> singles(N);
  parallel_blocks(N, threads, [&](std::uint64_t rep) {
    polar::Engine eng = polar::substream(seed, rep);
    NeumaierSum<R> log_sum;
    RunningStats& single = singles[rep];
    for (std::uint64_t i = 0; i < M; ++i) {
      const auto [f, g] = polar::sample_pair<T>(spec, eng);
      const R e = metrics::sigma_minus_one(generate<T>(algo, f, g));
      single.add(static_cast<double>(e) / u);
      log_sum.add(std::log1p(e));
    }
    products[rep] = static_cast<double>(std::expm1(log_sum.value())) / u;
  });

  RunningStats measured;
  RunningStats single;
  for (std::uint64_t rep = 0; rep < N; ++rep) {
    measured.add(products[rep]);
    single.merge(singles[rep]);
  }
  Accum2Result out;
  out.measured = measured.result();
  out.single = single.result();
  out.forecast = predict_lognormal_from_delta(out.single.avg * u, out.single.std * u, M);
  out.hist = centered_histogram(out.forecast.mu_y_minus_one / u, 6.0 * out.forecast.sigma_y / u);
  for (double x : products) out.hist.add(x);
  return out;
}

std::pair<int, int> schedule_3x3(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("schedule_3x3: k must be >= 1");
  switch (k % 3) {
    case 1:
      return {1, 2};
    case 2:
      return {2, 3};
    default:
      return {1, 3};
  }
}

template <std::floating_point T>
Accum3Result run_accum3(AlgorithmId algo, std::uint64_t M, std::uint64_t N, std::uint64_t seed,
                        unsigned threads) {
  require_complex(algo);
  if (N == 0) throw std::invalid_argument("accum3: N must be >= 1");
  using R = reference_t<T>;
  const double u = static_cast<double>(fp_constants<T>().u);
  const polar::ScenarioSpec spec{polar::default_rho<T>(), polar::default_rho<T>(),
                                 std::max<std::uint64_t>(M, 1), seed};

  std::vector<double> prod(N);
  std::vector<double> norm(N);
  std::vector<double> ortho(N);
  parallel_blocks(N, threads, [&](std::uint64_t rep) {
    polar::Engine eng = polar::substream(seed, rep);
    NeumaierSum<R> log_sum;
    Matrix<R> v = metrics::identity3<R>();
    for (std::uint64_t k = 1; k <= M; ++k) {
      const auto [f, g] = polar::sample_pair<T>(spec, eng);
      const ComplexRotation<T> rot = generate<T>(algo, f, g);
      log_sum.add(std::log1p(metrics::sigma_minus_one(rot)));
      const auto [i, j] = schedule_3x3(k);
      rotate_rows(v, i - 1, j - 1, rot);
    }
    prod[rep] = static_cast<double>(std::expm1(log_sum.value())) / u;
    norm[rep] = 1.5 * static_cast<double>(frobenius_over_sqrt3_minus_one(v)) / u;
    ortho[rep] = static_cast<double>(metrics::offdiag_avg(v)) / u;
  });

  RunningStats prod_stats;
  RunningStats norm_stats;
  RunningStats ortho_stats;
  for (std::uint64_t rep = 0; rep < N; ++rep) {
    prod_stats.add(prod[rep]);
    norm_stats.add(norm[rep]);
    ortho_stats.add(ortho[rep]);
  }
  Accum3Result out;
  out.prod_sigma = prod_stats.result();
  out.norm_proxy = norm_stats.result();
  out.orthogonality = ortho_stats.result();
  out.prod_sigma_hist = spanning_histogram(prod);
  out.norm_proxy_hist = spanning_histogram(norm);
  out.orthogonality_hist = spanning_histogram(ortho);
  for (std::uint64_t rep = 0; rep < N; ++rep) {
    out.prod_sigma_hist.add(prod[rep]);
    out.norm_proxy_hist.add(norm[rep]);
    out.orthogonality_hist.add(ortho[rep]);
  }
  return out;
}

#define GIVENS_INSTANTIATE(T)                                                                    \
  template SingleAccuracy run_single_accuracy<T>(AlgorithmId, const polar::ScenarioSpec&,       \
                                                 unsigned);                                      \
  template std::vector<HeatmapCell> run_heatmap<T>(AlgorithmId, std::span<const double>,        \
                                                   std::span<const double>, std::uint64_t,       \
                                                   std::uint64_t, unsigned);                     \
  template Accum2Result run_accum2<T>(AlgorithmId, std::uint64_t, std::uint64_t, std::uint64_t, \
                                      unsigned);                                                 \
  template Accum3Result run_accum3<T>(AlgorithmId, std::uint64_t, std::uint64_t, std::uint64_t, \
                                      unsigned);

GIVENS_INSTANTIATE(float)
GIVENS_INSTANTIATE(double)

#undef GIVENS_INSTANTIATE

}  // namespace givens::experiments
