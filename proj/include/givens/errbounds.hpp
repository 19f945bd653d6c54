// SPDX-License-Identifier: Apache-2.0
//
// Bounds on sqrt(1 + theta_n) where theta_n accumulates n roundings of unit
// roundoff u. All quantities are evaluated in binary64 whatever format u
// describes; out-of-domain arguments throw std::domain_error.
#pragma once

#include <cstdint>
#include <vector>

namespace givens::bounds {

/// gamma_x = x u / (1 - x u), for 0 <= x < 1/u.
double gamma(double x, double u);

/// Smallest factor with sqrt(1 + gamma_x) = 1 + gamma_{alpha_bar x};
/// 0 < x < 1/u, result in (1/2, 1).
double alpha_bar(double x, double u);

/// Factor with sqrt(1 - gamma_x) = 1 - gamma_{alpha x}; 0 < x < 1/(2u),
/// result in (1/2, 1) and never below alpha_bar(x, u).
double alpha(double x, double u);

/// gamma_{alpha(n) n}: |theta| <= this whenever 1 + theta = sqrt(1 + theta_n).
/// Requires n u <= 1/2.
double sqrt_theta_bound(std::int64_t n, double u);

/// (3 - 2nu)(floor(n/2)+1)^2 u <= 2 + floor(n/2) - ceil(n/2), i.e. whether
/// sqrt(1 + theta_n) is 1 + theta_{floor(n/2)+1}. Requires n >= 1, n u <= 1/2.
///
/// The right-hand side is 2 for even n and 1 for odd n, so the predicate is
/// monotone within each parity class but not over all n.
bool floor_half_criterion(std::int64_t n, double u);

/// Largest N such that floor_half_criterion holds for every n in [1, N].
/// Found by bisection within each parity class.
std::int64_t criterion_threshold(double u);

/// Same quantity by exhaustive scan of n = 1, 2, ... up to `limit`; returns
/// `limit` if no failure is found.
std::int64_t criterion_threshold_scan(double u, std::int64_t limit);

struct SmallNRow {
  std::int64_t n;
  double gamma_alpha_n;
  double gamma_half_n;
  double gamma_floor_half_plus1;
};

/// One row per n = 1..n_max comparing gamma_{alpha n}, gamma_{n/2} and
/// gamma_{floor(n/2)+1}. Requires n_max u <= 1/2.
std::vector<SmallNRow> small_n_table(std::int64_t n_max, double u);

}  // namespace givens::bounds
