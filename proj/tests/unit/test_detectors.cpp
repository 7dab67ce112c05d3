#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "../oracles.hpp"
#include "wfh/detectors.hpp"
#include "wfh/errors.hpp"

using namespace wfh;

namespace {

double sum(std::span<const double> v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("branch energies") {
  const PnrResolution M(3);
  auto e = branch_energies({0.0, 0.0}, DetectorConfig(M, 1.0));
  CHECK(e.plus == doctest::Approx(0.5));
  CHECK(e.minus == doctest::Approx(0.5));
  e = branch_energies({1.0, 0.0}, DetectorConfig(M, 1.0));
  CHECK(e.plus == doctest::Approx(2.0));
  CHECK(e.minus == 0.0);
  e = branch_energies({0.0, 1.0}, DetectorConfig(M, 1.0));
  CHECK(e.plus == doctest::Approx(1.0));
  CHECK(e.minus == doctest::Approx(1.0));
  // theta = pi/2 probes the imaginary part exactly.
  e = branch_energies({0.0, 1.0}, DetectorConfig(M, 1.0, std::numbers::pi / 2));
  CHECK(e.plus == doctest::Approx(2.0));
  CHECK(e.minus == 0.0);
}

TEST_CASE("configuration validation") {
  const PnrResolution M(2);
  CHECK_THROWS_AS(DetectorConfig(M, -1.0), DomainError);
  CHECK_THROWS_AS(DetectorConfig(M, NAN), DomainError);
  CHECK_THROWS_AS(DetectorConfig(M, 1.0, std::numbers::pi), DomainError);
  CHECK_THROWS_AS(DetectorConfig(M, 1.0, -0.1), DomainError);
  CHECK_THROWS_AS(CoherentAmplitude(INFINITY, 0.0), DomainError);
  CHECK(parse_detector_kind("wh") == DetectorKind::WH);
  CHECK(parse_detector_kind("DW") == DetectorKind::DW);
  CHECK_THROWS_AS(parse_detector_kind("xx"), ConfigError);
}

TEST_CASE("WH distribution examples") {
  const auto vac = wh_distribution({0.0, 0.0}, DetectorConfig(PnrResolution(4), 0.0));
  CHECK(vac(0, 0) == 1.0);
  CHECK(sum(vac.flat()) == 1.0);

  const auto p = wh_distribution({0.0, 0.0}, DetectorConfig(PnrResolution(1), 1.0));
  CHECK(p(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  const PnrResolution M(4);
  for (double x : {0.3, 1.1, 2.7}) {
    const auto a = wh_distribution({x, 0.0}, DetectorConfig(M, 0.8));
    const auto b = wh_distribution({-x, 0.0}, DetectorConfig(M, 0.8));
    for (int n1 = 0; n1 <= 4; ++n1)
      for (int n2 = 0; n2 <= 4; ++n2) CHECK(a(n1, n2) == b(n2, n1));
  }
  const auto ref = oracle::wh(0.9, 1.3, 3);
  const auto got = wh_distribution({0.9, 0.0}, DetectorConfig(PnrResolution(3), 1.3));
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) CHECK(got(n1, n2) == doctest::Approx(ref[n1][n2]).epsilon(1e-13));
}

TEST_CASE("HL distribution examples") {
  const auto s = hl_distribution({0.0, 0.0}, DetectorConfig(PnrResolution(1), 1.0));
  const double q0 = std::exp(-0.5), q1 = 1.0 - q0;
  CHECK(s.at(0) == doctest::Approx(q0 * q0 + q1 * q1).epsilon(1e-14));
  CHECK(s.at(0) == doctest::Approx(0.522697).epsilon(1e-6));
  CHECK(s.at(1) == doctest::Approx(0.238651).epsilon(1e-5));
  CHECK(s.at(-1) == s.at(1));
  CHECK_THROWS_AS(s.at(2), DomainError);

  for (double z : {0.2, 1.0, 3.0})
    for (double th : {0.0, 0.7, 2.0}) {
      const auto t = hl_distribution({0.0, 0.0}, DetectorConfig(PnrResolution(5), z, th));
      for (int d = 1; d <= 5; ++d) CHECK(t.at(d) == doctest::Approx(t.at(-d)).epsilon(1e-14));
    }
}

TEST_CASE("HL is the exact contraction of WH") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int t = 0; t < 100; ++t) {
    const DetectorConfig cfg(PnrResolution(1 + t % 8), std::abs(u(rng)), 0.0);
    const CoherentAmplitude a(u(rng), u(rng));
    const auto wh = wh_distribution(a, cfg);
    const auto hl = hl_distribution(a, cfg);
    const int M = cfg.M();
    for (int d = -M; d <= M; ++d) {
      double s = 0.0;
      for (int n1 = 0; n1 <= M; ++n1)
        for (int n2 = 0; n2 <= M; ++n2)
          if (n1 - n2 == d) s += wh(n1, n2);
      REQUIRE(std::abs(hl.at(d) - s) <= 1e-15);
    }
  }
}

TEST_CASE("normalization on random draws") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> amp(-3.0, 3.0), zd(0.0, 4.0), th(0.0, 3.14159);
  std::uniform_int_distribution<int> Md(1, 6);
  for (int t = 0; t < 1000; ++t) {
    const PnrResolution M(Md(rng));
    const CoherentAmplitude a(amp(rng), amp(rng));
    const DetectorConfig cfg(M, zd(rng), th(rng));
    REQUIRE(std::abs(sum(wh_distribution(a, cfg).flat()) - 1.0) < 1e-10);
    REQUIRE(std::abs(sum(hl_distribution(a, cfg).flat()) - 1.0) < 1e-10);
    REQUIRE(std::abs(sum(dw_distribution(a, M, cfg.z()).flat()) - 1.0) < 1e-9);
  }
}

TEST_CASE("DW distribution") {
  const auto vac = dw_distribution({0.0, 0.0}, PnrResolution(3), 0.0);
  CHECK(vac(0, 0, 0, 0) == 1.0);

  const PnrResolution M(3);
  const CoherentAmplitude a(0.8, -1.2);
  const double z = 1.1;
  const auto dw = dw_distribution(a, M, z);
  const CoherentAmplitude half(a.re() / std::sqrt(2.0), a.im() / std::sqrt(2.0));
  const auto q = wh_distribution(half, DetectorConfig(M, z, 0.0));
  const auto p = wh_distribution(half, DetectorConfig(M, z, std::numbers::pi / 2));
  for (int n1 = 0; n1 <= 3; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2)
      for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2)
          REQUIRE(std::abs(dw(n1, n2, m1, m2) - q(n1, n2) * p(m1, m2)) <= 1e-12);
  CHECK_THROWS_AS(dw(4, 0, 0, 0), DomainError);
  CHECK_THROWS_AS(dw_arm_config(M, z, 2), DomainError);
}

TEST_CASE("Skellam limit") {
  const double z = 2.0, x = 1.0;
  const auto s = hl_distribution({x, 0.0}, DetectorConfig(PnrResolution(60), z));
  const double mu1 = (x + z) * (x + z) / 2.0, mu2 = (x - z) * (x - z) / 2.0;
  for (int d = -60; d <= 60; ++d) REQUIRE(std::abs(s.at(d) - oracle::skellam(mu1, mu2, d)) < 1e-10);
}

TEST_CASE("difference photocurrent moments") {
  const DetectorConfig cfg(PnrResolution(60), std::sqrt(10.0));
  CHECK(std::abs(hl_difference_moment(DetectorConfig(PnrResolution(5), 1.3), {0.0, 0.0}, 1)) <
        1e-15);
  for (double x : {0.2, 0.7, 1.5}) {
    const double z = cfg.z();
    CHECK(hl_difference_moment(cfg, {x, 0.0}, 1) == doctest::Approx(z * 2.0 * x).epsilon(1e-6));
    CHECK(hl_difference_moment(cfg, {x, 0.0}, 2) ==
          doctest::Approx(z * z * (4.0 * x * x + 1.0) + x * x).epsilon(1e-6));
  }
  CHECK_THROWS_AS(hl_difference_moment(cfg, {0.0, 0.0}, 0), DomainError);
  CHECK_THROWS_AS(hl_difference_moment(cfg, {0.0, 0.0}, 5), DomainError);
}
