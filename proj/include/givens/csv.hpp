// SPDX-License-Identifier: Apache-2.0
//
// CSV schemas written by the experiments. Floating-point fields use
// scientific notation with 17 significant digits ("%.16e"), so every binary64
// value round-trips.
#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "givens/errbounds.hpp"
#include "givens/stats.hpp"

namespace givens::csv {

inline constexpr std::string_view kBoundsHeader = "n,gamma_alpha_n,gamma_half_n,gamma_floor_half_plus1";
inline constexpr std::string_view kThresholdHeader = "precision,unit_roundoff,largest_n_all_hold,first_failing_n";
inline constexpr std::string_view kStatsHeader = "algo,metric,avg,std,avg_abs,std_abs,max_abs,count";
inline constexpr std::string_view kHistogramHeader = "algo,metric,bin_left,bin_right,count";
inline constexpr std::string_view kHeatmapHeader = "log2_f,log2_g,sigma_err_avg";
inline constexpr std::string_view kForecastHeader = "algo,M,N,mu_x_err,sigma_x,mu_y_err,sigma_y";
inline constexpr std::string_view kBenchHeader = "scenario,algo,ns_per_call";

/// "%.16e"; infinities print as "inf" / "-inf", NaN as "nan".
std::string sci(double x);

void write_bounds_row(std::ostream& out, const bounds::SmallNRow& row);
void write_stats_row(std::ostream& out, std::string_view algo, std::string_view metric,
                     const ErrorStats& s);
void write_histogram_rows(std::ostream& out, std::string_view algo, std::string_view metric,
                          const Histogram& h);

}  // namespace givens::csv
