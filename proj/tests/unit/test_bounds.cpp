#include <cmath>
#include <limits>

#include "cograte/bounds.hpp"
#include "cograte/rng.hpp"
#include "doctest.h"

using namespace cograte;

namespace {

// Closed-form oracle for P = Q = 10, n = 1, R = 2: the bound equals the rate
// where (11 + 10 g^2) / (2 g sqrt(10)) = 2^2, i.e. 10 g^2 - 8 sqrt(10) g + 11 = 0.
struct QuadraticOracle {
  double gamma_lo;
  double gamma_hi;
  double probability;  // Rayleigh(1) mass of the interval
};

QuadraticOracle outage_oracle_p10q10r2() {
  const double b = 8.0 * std::sqrt(10.0);
  const double disc = std::sqrt(b * b - 4.0 * 10.0 * 11.0);
  const double lo = (b - disc) / 20.0;
  const double hi = (b + disc) / 20.0;
  return {lo, hi, std::exp(-lo * lo / 2.0) - std::exp(-hi * hi / 2.0)};
}

}  // namespace

TEST_CASE("phase bound closed-form values") {
  CHECK(upper_bound_phase({1.0, 1.0, 1.0}) ==
        doctest::Approx(0.5 * std::log2(9.0 / 4.0)).epsilon(1e-14));
  CHECK(upper_bound_phase({10.0, 10.0, 1.0}) ==
        doctest::Approx(0.5 * std::log2(441.0 / 40.0)).epsilon(1e-14));
  // General noise power: doubling every power shifts nothing but n scaling.
  CHECK(upper_bound_phase({2.0, 2.0, 2.0}) ==
        doctest::Approx(0.5 * std::log2(36.0 / 16.0)).epsilon(1e-14));
}

TEST_CASE("fade bound equals phase bound at gamma = 1") {
  Xoshiro256pp rng(11);
  for (int i = 0; i < 1000; ++i) {
    const ChannelParams cp(db_to_linear(-20 + 50 * rng.uniform()),
                           db_to_linear(-20 + 50 * rng.uniform()),
                           db_to_linear(-6 + 12 * rng.uniform()));
    const double a = upper_bound_fade(cp, 1.0);
    const double b = upper_bound_phase(cp);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
  }
  CHECK_THROWS_AS(upper_bound_fade({1.0, 1.0, 1.0}, 0.0), std::domain_error);
}

TEST_CASE("fade bound minimum has the closed form") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const FadeBoundMinimum m = upper_bound_fade_minimum(cp);
  CHECK(m.gamma == doctest::Approx(std::sqrt(1.1)).epsilon(1e-14));
  // At the minimizer the bound collapses to half the clean-channel capacity.
  CHECK(m.rate == doctest::Approx(0.5 * std::log2(11.0)).epsilon(1e-13));
  CHECK(m.rate == doctest::Approx(upper_bound_fade(cp, m.gamma)).epsilon(1e-14));
  // Neighbors sit above the minimum.
  CHECK(upper_bound_fade(cp, m.gamma * 0.9) > m.rate);
  CHECK(upper_bound_fade(cp, m.gamma * 1.1) > m.rate);
  // Large-gamma branch increases.
  CHECK(upper_bound_fade(cp, 8.0) > upper_bound_fade(cp, 4.0));
}

TEST_CASE("outage interval matches the quadratic oracle") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const FadeModel fade = FadeModel::rayleigh(1.0);
  const QuadraticOracle oracle = outage_oracle_p10q10r2();
  const OutageInterval iv = outage_interval(cp, fade, 2.0);
  CHECK(iv.gamma_lo == doctest::Approx(oracle.gamma_lo).epsilon(1e-8));
  CHECK(iv.gamma_hi == doctest::Approx(oracle.gamma_hi).epsilon(1e-8));
  CHECK(iv.probability == doctest::Approx(oracle.probability).epsilon(1e-8));
  // Frozen digits from the oracle above.
  CHECK(iv.gamma_lo == doctest::Approx(0.5578042829).epsilon(1e-8));
  CHECK(iv.gamma_hi == doctest::Approx(1.9720178453).epsilon(1e-8));
  CHECK(iv.probability == doctest::Approx(0.7128556).epsilon(1e-6));
}

TEST_CASE("outage edge cases") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const FadeModel fade = FadeModel::rayleigh(1.0);
  // Below the minimum of the bound there is no outage interval.
  CHECK(outage_lower_bound(cp, fade, 1.7) == 0.0);
  // Huge rates swallow nearly the whole support.
  CHECK(outage_lower_bound(cp, fade, 40.0) > 0.999999);
  CHECK_THROWS_AS(outage_lower_bound(cp, FadeModel::fixed(1.0), 2.0), std::domain_error);
  CHECK_THROWS_AS(outage_lower_bound(cp, fade, -1.0), std::domain_error);

  OutageQuery query{cp, fade, CommittedRate{2.0}};
  CHECK(outage_lower_bound(query) == doctest::Approx(0.7128556).epsilon(1e-6));
  query.target = TargetOutage{0.1};
  CHECK_THROWS_AS(outage_lower_bound(query), std::domain_error);
}

TEST_CASE("outage lower bound is nondecreasing in the rate") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const FadeModel fade = FadeModel::rayleigh(1.0);
  double prev = -1.0;
  for (int i = 0; i < 100; ++i) {
    const double r = 0.1 + 0.08 * i;
    const double p = outage_lower_bound(cp, fade, r);
    CHECK(p >= prev - 1e-12);
    prev = p;
  }
}

TEST_CASE("rate_vs_outage inverts the outage bound") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const FadeModel fade = FadeModel::rayleigh(1.0);
  // p_out = 0 recovers the minimum of the bound.
  CHECK(rate_vs_outage(cp, fade, 0.0) ==
        doctest::Approx(0.5 * std::log2(11.0)).epsilon(1e-9));
  // Inverse-function consistency on the strictly increasing branch.
  for (const double r : {1.8, 2.0, 2.5, 3.0, 4.0}) {
    const double p = outage_lower_bound(cp, fade, r);
    CHECK(rate_vs_outage(cp, fade, p) >= r - 1e-6);
  }
  // Monotone nondecreasing on a 50-point grid.
  double prev = -1.0;
  for (int i = 0; i < 50; ++i) {
    const double rate = rate_vs_outage(cp, fade, i / 50.0);
    CHECK(rate >= prev - 1e-10);
    prev = rate;
  }
  CHECK(std::isinf(rate_vs_outage(cp, fade, 1.0)));
  CHECK_THROWS_AS(rate_vs_outage(cp, fade, 1.5), std::domain_error);

  OutageQuery query{cp, fade, TargetOutage{0.0}};
  CHECK(rate_vs_outage(query) == doctest::Approx(0.5 * std::log2(11.0)).epsilon(1e-9));
  query.target = CommittedRate{2.0};
  CHECK_THROWS_AS(rate_vs_outage(query), std::domain_error);
}

TEST_CASE("rate_vs_rayleigh_param sweeps the grid") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const auto single = rate_vs_rayleigh_param(cp, 0.1, {1.0});
  REQUIRE(single.size() == 1);
  CHECK(single[0].first == 1.0);
  CHECK(single[0].second ==
        doctest::Approx(rate_vs_outage(cp, FadeModel::rayleigh(1.0), 0.1)).epsilon(1e-12));

  const auto curve = rate_vs_rayleigh_param(cp, 0.1, {0.25, 0.5, 1.0, 2.0, 4.0});
  CHECK(curve.size() == 5);
  for (const auto& [s2, rate] : curve) {
    CHECK(rate >= 0.5 * std::log2(11.0) - 1e-9);
    CHECK(std::isfinite(rate));
  }
  // Tiny sigma2 concentrates the fade near zero where the bound is huge, so
  // the 10%-outage rate grows but stays finite.
  const double tiny = rate_vs_outage(cp, FadeModel::rayleigh(1e-4), 0.1);
  CHECK(std::isfinite(tiny));
  CHECK(tiny > rate_vs_outage(cp, FadeModel::rayleigh(1.0), 0.1));

  CHECK_THROWS_AS(rate_vs_rayleigh_param(cp, 0.1, {}), std::domain_error);
}
