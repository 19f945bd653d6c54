// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end: bound tables, accuracy statistics, heatmaps,
// accumulation runs and timings, each written as CSV into an output directory.
#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "givens/algorithm.hpp"
#include "givens/bench.hpp"
#include "givens/csv.hpp"
#include "givens/errbounds.hpp"
#include "givens/experiments.hpp"
#include "givens/fp_constants.hpp"
#include "givens/rng_polar.hpp"

namespace fs = std::filesystem;
using namespace givens;

namespace {

constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string out = ".";
  bool force = false;
  std::string precision = "binary32";
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

struct RhoFlags {
  std::optional<double> f_min, f_max, g_min, g_max;
};

struct Config {
  Common common;
  std::string algo = "all";
  std::uint64_t samples = 1000000;
  RhoFlags rho;
  std::int64_t nmax = 20;
  double log2_min = -60;
  double log2_max = 60;
  double log2_step = 4;
  std::uint64_t samples_per_cell = 1000;
  std::uint64_t M = 10000;
  std::uint64_t N = 1000;
  std::uint64_t N3 = 200;
  std::string scenarios;
  std::uint64_t pairs = 1000000;
  std::string kernels = "all";
};

void add_common(CLI::App* sub, Common& c, bool with_threads) {
  sub->add_option("--out", c.out, "Output directory (created if absent)");
  sub->add_flag("--force", c.force, "Overwrite existing output files");
  sub->add_option("--precision", c.precision, "Working format")
      ->check(CLI::IsMember({"binary32", "binary64"}));
  sub->add_option("--seed", c.seed, "Random seed");
  if (with_threads) sub->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
}

void add_rho(CLI::App* sub, RhoFlags& r) {
  const char* note = "log2 modulus bound (default +-50.5 binary32, +-484 binary64)";
  sub->add_option("--rho-f-min", r.f_min, note);
  sub->add_option("--rho-f-max", r.f_max, note);
  sub->add_option("--rho-g-min", r.g_min, note);
  sub->add_option("--rho-g-max", r.g_max, note);
}

std::vector<AlgorithmId> complex_algorithms(const std::string& name) {
  if (name == "all") return {kComplexAlgorithms.begin(), kComplexAlgorithms.end()};
  const auto id = parse_algorithm(name);
  if (!id) throw UsageError("unknown algorithm '" + name + "'");
  if (!is_complex(*id)) throw UsageError("algorithm '" + name + "' is not a complex generator");
  return {*id};
}

std::vector<bench::Kernel> bench_kernels(const std::string& list) {
  if (list == "all") return {std::begin(bench::kDefaultKernels), std::end(bench::kDefaultKernels)};
  std::vector<bench::Kernel> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    try {
      out.push_back(bench::parse_kernel(list.substr(start, comma - start)));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    start = comma + 1;
  }
  return out;
}

template <std::floating_point T>
polar::ScenarioSpec scenario_from(const RhoFlags& r, std::uint64_t samples, std::uint64_t seed) {
  const polar::RhoRange d = polar::default_rho<T>();
  polar::ScenarioSpec spec{{r.f_min.value_or(d.min), r.f_max.value_or(d.max)},
                           {r.g_min.value_or(d.min), r.g_max.value_or(d.max)},
                           samples,
                           seed};
  try {
    polar::validate<T>(spec);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

// Resolves output paths up front so nothing is computed when a write would
// be refused.
class Outputs {
 public:
  Outputs(const Common& c, const std::vector<std::string>& names) {
    const fs::path dir(c.out);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
      throw IoError("cannot create output directory " + dir.string());
    }
    for (const auto& name : names) {
      fs::path p = dir / name;
      if (fs::exists(p) && !c.force) {
        throw IoError("refusing to overwrite " + p.string() + " (pass --force)");
      }
      paths_.push_back(std::move(p));
    }
  }

  std::ofstream open(std::size_t i) const {
    std::ofstream out(paths_.at(i), std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + paths_[i].string() + " for writing");
    return out;
  }

  void close(std::ofstream& out, std::size_t i) const {
    out.close();
    if (!out) throw IoError("error writing " + paths_[i].string());
  }

 private:
  std::vector<fs::path> paths_;
};

double unit_roundoff(const std::string& precision) {
  return precision == "binary64" ? static_cast<double>(fp_constants<double>().u)
                                 : static_cast<double>(fp_constants<float>().u);
}

void run_bounds(const Config& cfg) {
  if (cfg.nmax < 1) throw UsageError("--nmax must be >= 1");
  const Outputs out(cfg.common, {"bounds.csv", "bounds_thresholds.csv"});
  const double u = unit_roundoff(cfg.common.precision);
  auto table = out.open(0);
  table << csv::kBoundsHeader << '\n';
  for (const auto& row : bounds::small_n_table(cfg.nmax, u)) csv::write_bounds_row(table, row);
  out.close(table, 0);

  auto thresholds = out.open(1);
  thresholds << csv::kThresholdHeader << '\n';
  for (const char* precision : {"binary32", "binary64"}) {
    const double up = unit_roundoff(precision);
    const std::int64_t n = bounds::criterion_threshold(up);
    thresholds << precision << ',' << csv::sci(up) << ',' << n << ',' << n + 1 << '\n';
  }
  out.close(thresholds, 1);
}

template <std::floating_point T>
void run_accuracy(const Config& cfg) {
  if (cfg.samples == 0) throw UsageError("--samples must be >= 1");
  const auto algos = complex_algorithms(cfg.algo);
  const auto spec = scenario_from<T>(cfg.rho, cfg.samples, cfg.common.seed);
  const Outputs out(cfg.common, {"accuracy_stats.csv", "accuracy_hist.csv"});
  auto stats = out.open(0);
  auto hist = out.open(1);
  stats << csv::kStatsHeader << '\n';
  hist << csv::kHistogramHeader << '\n';
  for (AlgorithmId id : algos) {
    const auto r = experiments::run_single_accuracy<T>(id, spec, cfg.common.threads);
    csv::write_stats_row(stats, name_of(id), "sigma", r.sigma);
    csv::write_stats_row(stats, name_of(id), "backward", r.backward);
    csv::write_histogram_rows(hist, name_of(id), "sigma", r.sigma_hist);
    csv::write_histogram_rows(hist, name_of(id), "backward", r.backward_hist);
  }
  out.close(stats, 0);
  out.close(hist, 1);
}

template <std::floating_point T>
void run_heatmap(const Config& cfg) {
  if (!(cfg.log2_step > 0) || !(cfg.log2_min <= cfg.log2_max)) {
    throw UsageError("heatmap grid needs --log2-min <= --log2-max and --log2-step > 0");
  }
  if (cfg.samples_per_cell == 0) throw UsageError("--samples-per-cell must be >= 1");
  std::vector<double> grid;
  for (int i = 0;; ++i) {
    const double x = cfg.log2_min + i * cfg.log2_step;
    if (x > cfg.log2_max) break;
    grid.push_back(x);
  }
  try {
    polar::validate<T>({{grid.front(), grid.back()}, {grid.front(), grid.back()}, 1, 1});
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto algos = complex_algorithms(cfg.algo);
  std::vector<std::string> names;
  for (AlgorithmId id : algos) names.push_back("heatmap_" + std::string(name_of(id)) + ".csv");
  const Outputs out(cfg.common, names);
  for (std::size_t a = 0; a < algos.size(); ++a) {
    const auto cells = experiments::run_heatmap<T>(algos[a], grid, grid, cfg.samples_per_cell,
                                                   cfg.common.seed, cfg.common.threads);
    auto file = out.open(a);
    file << csv::kHeatmapHeader << '\n';
    for (const auto& cell : cells) {
      file << csv::sci(cell.log2_f) << ',' << csv::sci(cell.log2_g) << ','
           << csv::sci(cell.sigma_err_avg) << '\n';
    }
    out.close(file, a);
  }
}

template <std::floating_point T>
void run_accum2(const Config& cfg) {
  if (cfg.M == 0 || cfg.N == 0) throw UsageError("--M and --N must be >= 1");
  const auto algos = complex_algorithms(cfg.algo);
  const Outputs out(cfg.common, {"accum2_stats.csv", "accum2_forecast.csv", "accum2_hist.csv"});
  auto stats = out.open(0);
  auto forecast = out.open(1);
  auto hist = out.open(2);
  stats << csv::kStatsHeader << '\n';
  forecast << csv::kForecastHeader << '\n';
  hist << csv::kHistogramHeader << '\n';
  const double u = static_cast<double>(fp_constants<T>().u);
  for (AlgorithmId id : algos) {
    const auto r = experiments::run_accum2<T>(id, cfg.M, cfg.N, cfg.common.seed,
                                              cfg.common.threads);
    csv::write_stats_row(stats, name_of(id), "prod_sigma", r.measured);
    csv::write_stats_row(stats, name_of(id), "sigma", r.single);
    forecast << name_of(id) << ',' << cfg.M << ',' << cfg.N << ','
             << csv::sci(r.forecast.mu_x_minus_one / u) << ',' << csv::sci(r.forecast.sigma_x / u)
             << ',' << csv::sci(r.forecast.mu_y_minus_one / u) << ','
             << csv::sci(r.forecast.sigma_y / u) << '\n';
    csv::write_histogram_rows(hist, name_of(id), "prod_sigma", r.hist);
  }
  out.close(stats, 0);
  out.close(forecast, 1);
  out.close(hist, 2);
}

template <std::floating_point T>
void run_accum3(const Config& cfg) {
  if (cfg.N3 == 0) throw UsageError("--N must be >= 1");
  const auto algos = complex_algorithms(cfg.algo);
  const Outputs out(cfg.common, {"accum3_stats.csv", "accum3_hist.csv"});
  auto stats = out.open(0);
  auto hist = out.open(1);
  stats << csv::kStatsHeader << '\n';
  hist << csv::kHistogramHeader << '\n';
  for (AlgorithmId id : algos) {
    const auto r = experiments::run_accum3<T>(id, cfg.M, cfg.N3, cfg.common.seed,
                                              cfg.common.threads);
    csv::write_stats_row(stats, name_of(id), "prod_sigma", r.prod_sigma);
    csv::write_stats_row(stats, name_of(id), "norm_proxy", r.norm_proxy);
    csv::write_stats_row(stats, name_of(id), "orthogonality", r.orthogonality);
    csv::write_histogram_rows(hist, name_of(id), "prod_sigma", r.prod_sigma_hist);
    csv::write_histogram_rows(hist, name_of(id), "norm_proxy", r.norm_proxy_hist);
    csv::write_histogram_rows(hist, name_of(id), "orthogonality", r.orthogonality_hist);
  }
  out.close(stats, 0);
  out.close(hist, 1);
}

template <std::floating_point T>
void run_bench(const Config& cfg) {
  if (cfg.pairs == 0) throw UsageError("--pairs must be >= 1");
  const auto kernels = bench_kernels(cfg.kernels);
  std::vector<polar::ScenarioSpec> scenarios;
  if (cfg.scenarios.empty()) {
    scenarios = polar::default_scenarios();
  } else {
    try {
      scenarios = polar::read_scenario_file(cfg.scenarios);
    } catch (const std::invalid_argument& e) {
      throw UsageError(cfg.scenarios + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw IoError(e.what());
    }
  }
  for (const auto& spec : scenarios) {
    try {
      polar::validate<T>(spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const Outputs out(cfg.common, {"bench.csv"});
  bench::pin_current_thread();
  const auto rows = bench::run_bench<T>(kernels, scenarios, cfg.pairs, cfg.common.seed);
  auto file = out.open(0);
  file << csv::kBenchHeader << '\n';
  for (const auto& row : rows) {
    file << row.scenario << ',' << bench::name_of(row.kernel) << ','
         << csv::sci(row.ns_per_call) << '\n';
  }
  out.close(file, 0);
}

template <class Fn32, class Fn64>
void dispatch(const Config& cfg, Fn32 f32, Fn64 f64) {
  if (cfg.common.precision == "binary64") {
    f64(cfg);
  } else {
    f32(cfg);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Givens rotation accuracy experiments", "givens"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  Config cfg;

  auto* bounds = app.add_subcommand("bounds", "Small-n bound table and criterion thresholds");
  add_common(bounds, cfg.common, false);
  bounds->add_option("--nmax", cfg.nmax, "Largest n in the table");

  auto* accuracy = app.add_subcommand("accuracy", "Single-rotation sigma and backward errors");
  add_common(accuracy, cfg.common, true);
  accuracy->add_option("--algo", cfg.algo, "cplx39, cplx310, cplx_new, cplx_cast or all");
  accuracy->add_option("--samples", cfg.samples, "Random (f, g) pairs");
  add_rho(accuracy, cfg.rho);

  auto* heatmap = app.add_subcommand("heatmap", "Mean sigma error over a (|f|, |g|) grid");
  add_common(heatmap, cfg.common, true);
  heatmap->add_option("--algo", cfg.algo, "cplx39, cplx310, cplx_new, cplx_cast or all");
  heatmap->add_option("--log2-min", cfg.log2_min, "Smallest log2 modulus on each axis");
  heatmap->add_option("--log2-max", cfg.log2_max, "Largest log2 modulus on each axis");
  heatmap->add_option("--log2-step", cfg.log2_step, "Grid spacing in log2 units");
  heatmap->add_option("--samples-per-cell", cfg.samples_per_cell, "Random phases per cell");

  auto* accum2 = app.add_subcommand("accum2", "Products of M singular values, with forecast");
  add_common(accum2, cfg.common, true);
  accum2->add_option("--algo", cfg.algo, "cplx39, cplx310, cplx_new, cplx_cast or all");
  accum2->add_option("--M", cfg.M, "Rotations per product");
  accum2->add_option("--N", cfg.N, "Repetitions");

  auto* accum3 = app.add_subcommand("accum3", "Accumulation of M rotations on a 3x3 matrix");
  add_common(accum3, cfg.common, true);
  accum3->add_option("--algo", cfg.algo, "cplx39, cplx310, cplx_new, cplx_cast or all");
  accum3->add_option("--M", cfg.M, "Rotations per repetition");
  accum3->add_option("--N", cfg.N3, "Repetitions");

  auto* bench_cmd = app.add_subcommand("bench", "Time the complex generators (single thread)");
  add_common(bench_cmd, cfg.common, false);
  bench_cmd->add_option("--scenarios", cfg.scenarios,
                        "Scenario file (rho_f_min,rho_f_max,rho_g_min,rho_g_max per line); "
                        "built-in seven scenarios when empty");
  bench_cmd->add_option("--pairs", cfg.pairs, "Inputs per scenario");
  bench_cmd->add_option("--kernels", cfg.kernels,
                        "Comma-separated list of cplx39, cplx310, cplx_new, cplx39_cast, "
                        "cplx310_cast, cplx_cast, noop; or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (bounds->parsed()) {
      run_bounds(cfg);
    } else if (accuracy->parsed()) {
      dispatch(cfg, run_accuracy<float>, run_accuracy<double>);
    } else if (heatmap->parsed()) {
      dispatch(cfg, run_heatmap<float>, run_heatmap<double>);
    } else if (accum2->parsed()) {
      dispatch(cfg, run_accum2<float>, run_accum2<double>);
    } else if (accum3->parsed()) {
      dispatch(cfg, run_accum3<float>, run_accum3<double>);
    } else if (bench_cmd->parsed()) {
      dispatch(cfg, run_bench<float>, run_bench<double>);
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "givens: %s\n", e.what());
    return kExitUsage;
  } catch (const IoError& e) {
    std::fprintf(stderr, "givens: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "givens: %s\n", e.what());
    return kExitIo;
  }
  return 0;
}
