#include <doctest.h>

#include <cmath>

#include "wfh/baselines.hpp"
#include "wfh/errors.hpp"

using namespace wfh;

TEST_CASE("closed-form values") {
  CHECK(shannon_sh(0.0) == 0.0);
  CHECK(shannon_sh(2.0) == doctest::Approx(std::log2(3.0)).epsilon(1e-15));
  CHECK(shannon_sh(0.25) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(shannon_dh(0.0) == 0.0);
  CHECK(shannon_dh(1.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(shannon_dh(2.0) - shannon_sh(2.0)) < 1e-15);
  CHECK(holevo(0.0) == 0.0);
  CHECK(holevo(1.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(holevo(3.0) == doctest::Approx(4.0 * 2.0 - 3.0 * std::log2(3.0)).epsilon(1e-14));
  CHECK_THROWS_AS(shannon_sh(-1.0), DomainError);
  CHECK_THROWS_AS(holevo(NAN), DomainError);
}

TEST_CASE("DD bound") {
  CHECK_THROWS_AS(dd_upper_bound(0.0), DomainError);
  CHECK_THROWS_AS(dd_upper_bound(1e-13), DomainError);
  CHECK(std::isfinite(dd_upper_bound(1e-12)));
  CHECK(dd_upper_bound(1e-12) > 0.0);
  // Direct transcription at n_S = 1.
  const double e = std::exp(1.0 + 0.57721566490153286);
  const double a = 1.0 + (1.0 + e) + 2.0;
  const double ref = std::log2(a / (e + 2.0)) +
                     std::log2(1.0 + (std::sqrt(a / 2.0) - 1.0) / std::sqrt(2.0 * std::exp(1.0)));
  CHECK(dd_upper_bound(1.0) == doctest::Approx(ref).epsilon(1e-14));
}

TEST_CASE("crossovers") {
  CHECK(find_crossover(shannon_sh, shannon_dh, 1.0, 3.0) == doctest::Approx(2.0).epsilon(1e-4));
  const double n_sh = find_crossover(shannon_sh, dd_upper_bound, 0.05, 0.5);
  const double n_dh = find_crossover(shannon_dh, dd_upper_bound, 0.3, 1.5);
  CHECK(std::abs(n_sh - 0.22) <= 0.02);
  CHECK(std::abs(n_dh - 0.79) <= 0.02);
  CHECK_THROWS_AS(find_crossover(shannon_sh, shannon_dh, 3.0, 5.0), BracketError);
  CHECK_THROWS_AS(find_crossover(shannon_sh, shannon_dh, 3.0, 1.0), DomainError);
}

TEST_CASE("monotone and ordered curves") {
  double prev[4] = {-1, -1, -1, -1};
  for (int k = 1; k <= 4000; ++k) {
    const double n = 100.0 * k / 4000.0;
    const double v[4] = {shannon_sh(n), shannon_dh(n), holevo(n), dd_upper_bound(n)};
    for (int i = 0; i < 4; ++i) {
      REQUIRE(v[i] > prev[i]);
      prev[i] = v[i];
    }
    REQUIRE(v[2] >= v[0]);
    REQUIRE(v[2] >= v[1]);
    REQUIRE(v[3] <= v[2]);
    if (n <= 2.0)
      REQUIRE(v[0] >= v[1] - 1e-12);
    else
      REQUIRE(v[0] <= v[1] + 1e-12);
  }
}

TEST_CASE("lossy channel mapping") {
  const ChannelParams c(0.25, 8.0);
  CHECK(std::abs(c.n_S() - 2.0) < 1e-15);
  CHECK_THROWS_AS(ChannelParams(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(ChannelParams(1.5, 1.0), DomainError);
  CHECK_THROWS_AS(ChannelParams(0.5, -1.0), DomainError);
}
