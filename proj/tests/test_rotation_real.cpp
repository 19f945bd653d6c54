// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "givens/rotation.hpp"
#include "oracle.hpp"

using namespace givens;

namespace {

const float u = fp_constants<float>().u;
float gamma_k(int k) { return k * u / (1 - k * u); }

}  // namespace

TEST_CASE("real sign conventions on (-3, 4)") {
  const auto r39 = lartg_real<double>(AlgorithmId::Real39, -3, 4);
  CHECK(r39.r == 5.0);
  CHECK(r39.c == -0.6);
  CHECK(r39.s == 0.8);
  const auto r310 = lartg_real<double>(AlgorithmId::Real310, -3, 4);
  CHECK(r310.r == -5.0);
  CHECK(r310.c == doctest::Approx(0.6).epsilon(1e-15));
  CHECK(r310.s == doctest::Approx(-0.8).epsilon(1e-15));
  const auto rh = lartg_real<double>(AlgorithmId::RealHigham, -3, 4);
  CHECK(rh.r == 5.0);
  CHECK(rh.c == -0.6);
}

TEST_CASE("Real39 makes c non-negative when |f| > |g|") {
  const auto rot = lartg_real<double>(AlgorithmId::Real39, -4, 3);
  CHECK(rot.c == 0.8);
  CHECK(rot.s == -0.6);
  CHECK(rot.r == -5.0);
}

TEST_CASE("real zero and NaN inputs") {
  for (AlgorithmId v : kRealAlgorithms) {
    const auto gz = lartg_real<float>(v, -2.5f, 0.0f);
    CHECK(gz.c == 1.0f);
    CHECK(gz.s == 0.0f);
    CHECK(gz.r == -2.5f);
    const auto fz = lartg_real<float>(v, 0.0f, -7.0f);
    CHECK(fz.c == 0.0f);
    CHECK(fz.s == 1.0f);
    CHECK(fz.r == -7.0f);
    const auto nan = lartg_real<float>(v, std::numeric_limits<float>::quiet_NaN(), 1.0f);
    CHECK(std::isnan(nan.c));
    CHECK(std::isnan(nan.r));
  }
}

TEST_CASE("real variants agree in magnitude with each other") {
  std::mt19937_64 eng(3);
  std::uniform_real_distribution<double> expo(-40, 40);
  for (int i = 0; i < 20000; ++i) {
    const float f = std::copysign(static_cast<float>(std::exp2(expo(eng))), (eng() & 1) ? 1.f : -1.f);
    const float g = std::copysign(static_cast<float>(std::exp2(expo(eng))), (eng() & 1) ? 1.f : -1.f);
    const auto a = lartg_real(AlgorithmId::Real39, f, g);
    const auto h = lartg_real(AlgorithmId::RealHigham, f, g);
    REQUIRE(std::abs(a.c) == std::abs(h.c));
    REQUIRE(std::abs(a.s) == std::abs(h.s));
    REQUIRE(std::abs(a.r) == std::abs(h.r));
    const auto b = lartg_real(AlgorithmId::Real310, f, g);
    CHECK(std::abs(b.c - std::abs(h.c)) <= 2 * gamma_k(4) * std::abs(h.c));
    CHECK(std::abs(std::abs(b.r) - std::abs(h.r)) == 0.0f);
  }
}

TEST_CASE("real rotations against a 100-digit oracle, including scaled inputs") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> expo(-120, 120);
  for (int i = 0; i < 20000; ++i) {
    const float f = std::copysign(static_cast<float>(std::exp2(expo(eng))), (eng() & 1) ? 1.f : -1.f);
    const float g = std::copysign(static_cast<float>(std::exp2(expo(eng))), (eng() & 1) ? 1.f : -1.f);
    // Beyond this ratio the true c or s is below the smallest float.
    if (std::abs(std::log2(std::abs(f / double(g)))) > 100) continue;
    const auto ex = oracle::rotation(std::complex<float>(f), std::complex<float>(g));
    for (AlgorithmId v : kRealAlgorithms) {
      const auto rot = lartg_real(v, f, g);
      // Compare magnitudes: the variants differ only in where the sign goes.
      REQUIRE(oracle::rel_err(std::abs(rot.c), ex.c) <= gamma_k(4));
      REQUIRE(oracle::rel_err(std::abs(rot.r), oracle::abs(ex.r)) <= gamma_k(3));
      const auto s_exact = oracle::abs(ex.s);
      if (s_exact > oracle::Big(1e-30)) {
        REQUIRE(oracle::rel_err(std::abs(rot.s), s_exact) <= gamma_k(4));
      }
      // c f + s g = r and -s f + c g = 0 for the signs actually returned.
      CHECK(std::abs(double(rot.c) * f + double(rot.s) * g - rot.r) <= 4 * u * std::abs(rot.r));
    }
  }
}
