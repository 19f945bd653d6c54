// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "givens/errbounds.hpp"

using namespace givens::bounds;
using Big = boost::multiprecision::cpp_bin_float_100;
using boost::multiprecision::cpp_int;

namespace {

const double u32 = std::ldexp(1.0, -24);
const double u64 = std::ldexp(1.0, -53);

Big big_gamma(const Big& x, const Big& u) { return x * u / (1 - x * u); }

Big big_alpha_bar(const Big& x, const Big& u) {
  const Big w = x * u;
  return (1 - sqrt(1 - w)) / w;
}

Big big_alpha(const Big& x, const Big& u) {
  const Big w = x * u * (3 - 2 * x * u);
  return (1 - sqrt(1 - w)) / w;
}

double rel(double computed, const Big& exact) {
  return static_cast<double>(abs(Big(computed) - exact) / abs(exact));
}

// The criterion with u = 2^-p, multiplied through by 2^(2p): integers only.
bool exact_criterion(std::int64_t n, int p) {
  const cpp_int two_p = cpp_int(1) << p;
  const std::int64_t m = n / 2 + 1;
  const cpp_int lhs = (3 * two_p - 2 * cpp_int(n)) * cpp_int(m) * cpp_int(m);
  const cpp_int rhs = cpp_int(2 + n / 2 - (n - n / 2)) * two_p * two_p;
  return lhs <= rhs;
}

}  // namespace

TEST_CASE("gamma, alpha_bar and alpha agree with 100-digit evaluations") {
  for (double u : {u32, u64}) {
    const Big ub(u);
    for (int k = 0; k <= 60; ++k) {
      const double x = std::ldexp(1.0, k) * 0.75;
      if (x * u >= 0.5) break;
      CHECK(rel(gamma(x, u), big_gamma(Big(x), ub)) <= 4e-16);
      CHECK(rel(alpha_bar(x, u), big_alpha_bar(Big(x), ub)) <= 4e-16);
      CHECK(rel(alpha(x, u), big_alpha(Big(x), ub)) <= 4e-16);
    }
  }
}

TEST_CASE("lemma identities hold to rounding level") {
  for (double u : {u32, u64}) {
    for (int k = 0; k < 50; ++k) {
      const double x = std::exp2(k * std::log2(0.45 / u) / 49);
      const Big gx = big_gamma(Big(x), Big(u));
      const Big plus = gx / (1 + sqrt(1 + gx));   // sqrt(1+g) - 1
      const Big minus = gx / (1 + sqrt(1 - gx));  // 1 - sqrt(1-g)
      CHECK(rel(gamma(alpha_bar(x, u) * x, u), plus) <= 8e-16);
      CHECK(rel(gamma(alpha(x, u) * x, u), minus) <= 8e-16);
    }
  }
}

TEST_CASE("alpha_bar <= alpha, both inside (1/2, 1)") {
  for (double u : {u32, u64}) {
    for (int k = 0; k < 200; ++k) {
      const double x = std::exp2(k * std::log2(0.49 / u) / 199);
      const double ab = alpha_bar(x, u);
      const double a = alpha(x, u);
      // The excess over 1/2 is about xu/8 (alpha_bar) or 3xu/8 (alpha); below
      // half an ulp of 1/2 the correctly rounded result is exactly 1/2.
      const double half_ulp = std::ldexp(1.0, -54);
      CHECK((ab > 0.5 || x * u / 8 < half_ulp));
      CHECK((a > 0.5 || 3 * x * u / 8 < half_ulp));
      CHECK(ab >= 0.5);
      CHECK(ab < 1.0);
      CHECK(a >= 0.5);
      CHECK(a < 1.0);
      CHECK(ab <= a);
    }
  }
}

TEST_CASE("gamma edge values and domain") {
  CHECK(gamma(0, u32) == 0.0);
  CHECK(gamma(1, 0.25) == doctest::Approx(1.0 / 3.0));
  CHECK_THROWS_AS(gamma(-1, u32), std::domain_error);
  CHECK_THROWS_AS(gamma(1 / u32, u32), std::domain_error);
  CHECK_THROWS_AS(gamma(1, 0.0), std::domain_error);
  CHECK_THROWS_AS(gamma(1, 0.5), std::domain_error);
  CHECK_THROWS_AS(alpha_bar(0, u32), std::domain_error);
  CHECK_THROWS_AS(alpha(0.5 / u32, u32), std::domain_error);
  CHECK_THROWS_AS(sqrt_theta_bound(0, u32), std::domain_error);
  CHECK_THROWS_AS(floor_half_criterion(0, u32), std::domain_error);
}

TEST_CASE("sqrt_theta_bound sits between gamma_{n/2} and gamma_n") {
  for (double u : {u32, u64}) {
    for (std::int64_t n = 1; n <= 1000; ++n) {
      const double b = sqrt_theta_bound(n, u);
      CHECK(b >= gamma(n / 2.0, u));
      CHECK(b <= gamma(static_cast<double>(n), u));
    }
  }
  CHECK(sqrt_theta_bound(6, u32) <= gamma(4, u32));
  const auto at_half = static_cast<std::int64_t>(0.5 / u32);
  CHECK(sqrt_theta_bound(at_half, u32) == gamma(static_cast<double>(at_half), u32));
}

TEST_CASE("floor_half_criterion matches exact integer arithmetic") {
  for (std::int64_t n = 1; n <= 10000; ++n) {
    REQUIRE(floor_half_criterion(n, u32) == exact_criterion(n, 24));
  }
  for (std::int64_t n : {109588315LL, 109588316LL, 109588317LL, 109588318LL, 109588319LL}) {
    CHECK(floor_half_criterion(n, u64) == exact_criterion(n, 53));
  }
}

TEST_CASE("floor_half_criterion boundary values") {
  CHECK(floor_half_criterion(1, u32));
  CHECK(floor_half_criterion(4728, u32));
  CHECK(floor_half_criterion(4730, u32));
  CHECK_FALSE(floor_half_criterion(4731, u32));
  CHECK(floor_half_criterion(109588316, u64));
  CHECK_FALSE(floor_half_criterion(109588317, u64));
}

TEST_CASE("floor_half_criterion is monotone within each parity class") {
  for (int parity = 1; parity <= 2; ++parity) {
    bool seen_failure = false;
    for (std::int64_t n = parity; n <= 10000; n += 2) {
      const bool ok = floor_half_criterion(n, u32);
      if (seen_failure) REQUIRE_FALSE(ok);
      if (!ok) seen_failure = true;
    }
    CHECK(seen_failure);
  }
}

TEST_CASE("criterion_threshold: bisection equals exhaustive scan") {
  CHECK(criterion_threshold(u32) == 4730);
  CHECK(criterion_threshold_scan(u32, 10000) == 4730);
  CHECK(criterion_threshold(u64) == 109588316);
  CHECK(criterion_threshold_scan(u64, 1000) == 1000);
  for (int p = 8; p <= 30; ++p) {
    const double u = std::ldexp(1.0, -p);
    CHECK(criterion_threshold(u) == criterion_threshold_scan(u, 1 << 20));
  }
}

TEST_CASE("small_n_table orders the three bounds") {
  const auto rows = small_n_table(20, u32);
  REQUIRE(rows.size() == 20);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    CHECK(r.n == static_cast<std::int64_t>(i + 1));
    CHECK(r.gamma_half_n <= r.gamma_alpha_n);
    CHECK(r.gamma_alpha_n <= r.gamma_floor_half_plus1);
    CHECK(std::abs(r.gamma_alpha_n - r.gamma_half_n) / r.gamma_half_n < 16 * u32);
  }
  CHECK(gamma(3, u32) / gamma(4, u32) < 0.75);
  CHECK(gamma(3, u64) / gamma(4, u64) < 0.75);
  CHECK_THROWS_AS(small_n_table(0, u32), std::domain_error);
}
