// SPDX-License-Identifier: Apache-2.0
#include "givens/csv.hpp"

#include <cmath>
#include <cstdio>

namespace givens::csv {

std::string sci(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", x);
  return buf;
}

void write_bounds_row(std::ostream& out, const bounds::SmallNRow& row) {
  out << row.n << ',' << sci(row.gamma_alpha_n) << ',' << sci(row.gamma_half_n) << ','
      << sci(row.gamma_floor_half_plus1) << '\n';
}

void write_stats_row(std::ostream& out, std::string_view algo, std::string_view metric,
                     const ErrorStats& s) {
  out << algo << ',' << metric << ',' << sci(s.avg) << ',' << sci(s.std) << ',' << sci(s.avg_abs)
      << ',' << sci(s.std_abs) << ',' << sci(s.max_abs) << ',' << s.count << '\n';
}

void write_histogram_rows(std::ostream& out, std::string_view algo, std::string_view metric,
                          const Histogram& h) {
  for (const auto& bin : h.bins()) {
    out << algo << ',' << metric << ',' << sci(bin.left) << ',' << sci(bin.right) << ','
        << bin.count << '\n';
  }
}

}  // namespace givens::csv
