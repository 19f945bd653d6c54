// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <complex>
#include <stdexcept>

#include "givens/metrics.hpp"
#include "givens/rng_polar.hpp"

using namespace givens;
using Big = boost::multiprecision::cpp_bin_float_100;
using cf = std::complex<float>;

namespace {

Big big_sigma_minus_one(const ComplexRotation<float>& rot) {
  const Big c(rot.c), sr(rot.s.real()), si(rot.s.imag());
  return sqrt(c * c + sr * sr + si * si) - 1;
}

}  // namespace

TEST_CASE("sigma - 1 is accurate where naive evaluation cancels") {
  const polar::ScenarioSpec spec{polar::default_rho<float>(), polar::default_rho<float>(), 0, 2};
  polar::Engine eng = polar::substream(2, 0);
  for (int i = 0; i < 5000; ++i) {
    const auto [f, g] = polar::sample_pair<float>(spec, eng);
    const auto rot = clartg_new(f, g);
    const Big exact = big_sigma_minus_one(rot);
    const double got = metrics::sigma_minus_one(rot);
    // Absolute error far below u = 6e-8 even when sigma - 1 is exactly 0.
    CHECK(std::abs(got - static_cast<double>(exact)) <= 1e-22);
  }
}

TEST_CASE("sigma of exactly unitary and scaled rotations") {
  for (const ComplexRotation<float>& exact :
       {ComplexRotation<float>{1.0f, {0, 0}, {2, 0}}, ComplexRotation<float>{0.0f, {0, 1}, {2, 0}}}) {
    CHECK(metrics::sigma(exact) == 1.0);
    CHECK(metrics::sigma_minus_one(exact) == 0.0);
  }
  const ComplexRotation<float> scaled{1.0f, {1.0f, 0.0f}, {1, 0}};
  CHECK(metrics::sigma(scaled) == doctest::Approx(std::sqrt(2.0)));
  CHECK(metrics::sigma_minus_one(scaled) == doctest::Approx(std::sqrt(2.0) - 1));
}

TEST_CASE("backward error agrees with a 100-digit evaluation") {
  const polar::ScenarioSpec spec{polar::default_rho<float>(), polar::default_rho<float>(), 0, 6};
  polar::Engine eng = polar::substream(6, 0);
  for (int i = 0; i < 2000; ++i) {
    const auto [f, g] = polar::sample_pair<float>(spec, eng);
    const auto rot = clartg39(f, g);
    const Big c(rot.c), sr(rot.s.real()), si(rot.s.imag()), rr(rot.r.real()), ri(rot.r.imag());
    const Big fr(f.real()), fi(f.imag()), gr(g.real()), gi(g.imag());
    // (c r - f, conj(s) r - g)
    const Big t1 = c * rr - fr, t2 = c * ri - fi;
    const Big t3 = sr * rr + si * ri - gr, t4 = sr * ri - si * rr - gi;
    const Big exact = sqrt(t1 * t1 + t2 * t2 + t3 * t3 + t4 * t4) /
                      sqrt(fr * fr + fi * fi + gr * gr + gi * gi);
    const double got = metrics::backward_error(rot, f, g);
    // Residual terms are rounded once in binary64: a few 1e-16 absolute.
    CHECK(std::abs(got - static_cast<double>(exact)) <= 2.5e-16);
  }
}

TEST_CASE("backward error: exact data, relative perturbation, (0,0)") {
  const ComplexRotation<float> exact{1.0f, {0, 0}, {3, -2}};
  CHECK(metrics::backward_error(exact, cf(3, -2), cf(0, 0)) == 0.0);
  const ComplexRotation<float> off{0.6f, {0.0f, -0.8f}, {5.05f, 0}};
  const double base = metrics::backward_error(ComplexRotation<float>{0.6f, {0.0f, -0.8f}, {5, 0}},
                                              cf(3, 0), cf(0, 4));
  CHECK(base < 1e-7);
  CHECK(metrics::backward_error(off, cf(3, 0), cf(0, 4)) == doctest::Approx(0.01).epsilon(1e-4));
  const ComplexRotation<float> off_big{0.6f, {0.0f, -0.8f}, {5.05e30f, 0}};
  CHECK(metrics::backward_error(off_big, cf(3e30f, 0), cf(0, 4e30f)) ==
        doctest::Approx(0.01).epsilon(1e-4));
  CHECK_THROWS_AS(metrics::backward_error(exact, cf(0, 0), cf(0, 0)), std::domain_error);
}

TEST_CASE("component errors: zero against itself, throws on zero oracle c") {
  const cf f(1.25f, -0.5f), g(0.75f, 2.0f);
  const auto rot = clartg_new(f, g);
  const auto wide = round_to<double>(rot);
  const auto e = metrics::component_rel_errors(rot, wide);
  CHECK(e.c == 0.0);
  CHECK(e.s == 0.0);
  CHECK(e.r == 0.0);
  const auto q = metrics::quality(rot, f, g);
  CHECK(q.c_relerr < 5);
  CHECK(q.s_relerr < 8);
  CHECK(q.r_relerr < 6);
  CHECK(std::abs(q.sigma_err) < 8);
  CHECK(q.backward_err < 14);
  CHECK_THROWS_AS(metrics::component_rel_errors(rot, clartg_new<double>({0, 0}, {1, 0})),
                  std::domain_error);
}

TEST_CASE("offdiag_avg and frobenius on known matrices") {
  const auto id = metrics::identity3();
  CHECK(metrics::offdiag_avg(id) == 0.0);
  CHECK(metrics::frobenius(id) == doctest::Approx(std::sqrt(3.0)));
  metrics::Matrix3 m = id;
  m[0][1] = 0.5;  // columns 0 and 1 now overlap: (m^H m)_{01} = 0.5
  CHECK(metrics::offdiag_avg(m) == doctest::Approx(2 * 0.5 / 6));
  m = id;
  m[2][2] = {0, 2};
  CHECK(metrics::frobenius(m) == doctest::Approx(std::sqrt(6.0)));
  CHECK(metrics::offdiag_avg(m) == 0.0);
}

TEST_CASE("product of rotations: ||prod Q||_F / sqrt(2) equals prod sigma") {
  const polar::ScenarioSpec spec{polar::default_rho<float>(), polar::default_rho<float>(), 0, 4};
  polar::Engine eng = polar::substream(4, 0);
  // 2x2 product in binary64 and the product of singular values in log form.
  std::complex<double> a{1}, b{0}, c{0}, d{1};
  double log_sigma = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto [f, g] = polar::sample_pair<float>(spec, eng);
    const auto rot = clartg310(f, g);
    const double cc = rot.c;
    const std::complex<double> s(rot.s);
    const auto na = cc * a + s * c, nb = cc * b + s * d;
    const auto nc = -std::conj(s) * a + cc * c, nd = -std::conj(s) * b + cc * d;
    a = na, b = nb, c = nc, d = nd;
    log_sigma += std::log1p(metrics::sigma_minus_one(rot));
  }
  const double fro = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  CHECK(std::abs(fro / std::sqrt(2.0) / std::exp(log_sigma) - 1) <= 1e-10);
}
