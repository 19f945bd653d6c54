// SPDX-License-Identifier: Apache-2.0
#include "givens/errbounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace givens::bounds {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(what);
}

void require_u(double u) {
  require(u > 0 && u < 0.5 && std::isfinite(u), "unit roundoff must lie in (0, 1/2)");
}

// 1 - sqrt(1 - w) = w / (1 + sqrt(1 - w)), so (1 - sqrt(1 - w)) / w needs no
// subtraction of nearby values.
double one_minus_sqrt_ratio(double w) { return 1.0 / (1.0 + std::sqrt(1.0 - w)); }

}  // namespace

double gamma(double x, double u) {
  require_u(u);
  const double xu = x * u;
  require(x >= 0 && xu < 1, "gamma: need 0 <= x < 1/u");
  return xu / (1.0 - xu);
}

double alpha_bar(double x, double u) {
  require_u(u);
  const double xu = x * u;
  require(x > 0 && xu < 1, "alpha_bar: need 0 < x < 1/u");
  return one_minus_sqrt_ratio(xu);
}

double alpha(double x, double u) {
  require_u(u);
  const double xu = x * u;
  require(x > 0 && xu < 0.5, "alpha: need 0 < x < 1/(2u)");
  return one_minus_sqrt_ratio(xu * (3.0 - 2.0 * xu));
}

double sqrt_theta_bound(std::int64_t n, double u) {
  require_u(u);
  require(n >= 1 && static_cast<double>(n) * u <= 0.5, "sqrt_theta_bound: need n >= 1, nu <= 1/2");
  const double nd = static_cast<double>(n);
  // alpha() excludes nu = 1/2 itself; the limit there is 1/(1+sqrt(0)) = 1.
  const double a = nd * u < 0.5 ? alpha(nd, u) : 1.0;
  return gamma(a * nd, u);
}

bool floor_half_criterion(std::int64_t n, double u) {
  require_u(u);
  require(n >= 1 && static_cast<double>(n) * u <= 0.5,
          "floor_half_criterion: need n >= 1, nu <= 1/2");
  const std::int64_t half_down = n / 2;
  const std::int64_t half_up = n - half_down;
  const double m = static_cast<double>(half_down + 1);
  const double lhs = (3.0 - 2.0 * static_cast<double>(n) * u) * (m * m) * u;
  const double rhs = static_cast<double>(2 + half_down - half_up);
  return lhs <= rhs;
}

namespace {

// First n = start, start + 2, ... for which the criterion fails; the
// predicate is monotone along that progression. Returns 0 if none fails up
// to nu <= 1/2.
std::int64_t first_failure_in_class(double u, std::int64_t start) {
  const auto limit = static_cast<std::int64_t>(std::floor(0.5 / u));
  if (start > limit) return 0;
  if (!floor_half_criterion(start, u)) return start;
  std::int64_t lo = 0;                    // holds at start + 2 lo
  std::int64_t hi = (limit - start) / 2;  // candidate failure index
  if (floor_half_criterion(start + 2 * hi, u)) return 0;
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (floor_half_criterion(start + 2 * mid, u)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return start + 2 * hi;
}

}  // namespace

std::int64_t criterion_threshold(double u) {
  require_u(u);
  const std::int64_t odd = first_failure_in_class(u, 1);
  const std::int64_t even = first_failure_in_class(u, 2);
  const auto limit = static_cast<std::int64_t>(std::floor(0.5 / u));
  std::int64_t first = limit + 1;
  if (odd != 0) first = std::min(first, odd);
  if (even != 0) first = std::min(first, even);
  return first - 1;
}

std::int64_t criterion_threshold_scan(double u, std::int64_t limit) {
  require_u(u);
  for (std::int64_t n = 1; n <= limit; ++n) {
    if (static_cast<double>(n) * u > 0.5 || !floor_half_criterion(n, u)) return n - 1;
  }
  return limit;
}

std::vector<SmallNRow> small_n_table(std::int64_t n_max, double u) {
  require_u(u);
  require(n_max >= 1 && static_cast<double>(n_max) * u <= 0.5, "small_n_table: need n_max u <= 1/2");
  std::vector<SmallNRow> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  for (std::int64_t n = 1; n <= n_max; ++n) {
    const double nd = static_cast<double>(n);
    rows.push_back({n, sqrt_theta_bound(n, u), gamma(nd / 2.0, u),
                    gamma(static_cast<double>(n / 2 + 1), u)});
  }
  return rows;
}

}  // namespace givens::bounds
