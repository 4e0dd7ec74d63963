#include <cmath>

#include "cograte/channel.hpp"
#include "cograte/rng.hpp"
#include "doctest.h"

using namespace cograte;

TEST_CASE("dB conversion round-trips to 1e-12 relative") {
  Xoshiro256pp rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double db = -40.0 + 80.0 * rng.uniform();
    const double back = linear_to_db(db_to_linear(db));
    CHECK(std::abs(back - db) <= 1e-12 * std::max(1.0, std::abs(db)));
  }
  CHECK(db_to_linear(10.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(db_to_linear(0.0) == 1.0);
  CHECK(db_to_linear(-10.0) == doctest::Approx(0.1).epsilon(1e-14));
}

TEST_CASE("ChannelParams validation") {
  CHECK_THROWS_AS(ChannelParams(0.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ChannelParams(1.0, -1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(ChannelParams(1.0, 1.0, 0.0), std::domain_error);
  const double nan = std::nan("");
  CHECK_THROWS_AS(ChannelParams(nan, 1.0, 1.0), std::domain_error);

  const ChannelParams cp = ChannelParams::from_db(10.0, 2.0);
  CHECK(cp.p == doctest::Approx(10.0));
  CHECK(cp.q == doctest::Approx(db_to_linear(2.0)));
  CHECK(cp.n == 1.0);
  CHECK(cp.has_unit_noise());

  const ChannelParams scaled(4.0, 2.0, 2.0);
  const ChannelParams unit = scaled.unit_noise();
  CHECK(unit.p == doctest::Approx(2.0));
  CHECK(unit.q == doctest::Approx(1.0));
  CHECK(unit.n == 1.0);
}

TEST_CASE("Rayleigh density integrates to one") {
  for (const double s2 : {0.25, 1.0, 4.0}) {
    const FadeModel fade = FadeModel::rayleigh(s2);
    // Simpson's rule out to 12 standard scales.
    const double hi = 12.0 * std::sqrt(s2);
    const int n = 20000;
    const double h = hi / n;
    double sum = fade.pdf(0.0) + fade.pdf(hi);
    for (int i = 1; i < n; ++i) sum += fade.pdf(i * h) * (i % 2 == 1 ? 4.0 : 2.0);
    const double integral = sum * h / 3.0;
    CHECK(std::abs(integral - 1.0) <= 1e-9);
    // cdf consistent with the integral of the pdf.
    CHECK(fade.cdf(std::sqrt(s2)) == doctest::Approx(-std::expm1(-0.5)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(FadeModel::rayleigh(0.0), std::domain_error);
  CHECK_THROWS_AS(FadeModel::rayleigh(1.0).gamma(), std::domain_error);
  CHECK_THROWS_AS(FadeModel::fixed(-1.0), std::domain_error);
  CHECK_THROWS_AS(FadeModel::fixed(1.0).sigma2(), std::domain_error);
}

TEST_CASE("baseline rates") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  CHECK(rate_ignore_interference(cp, 1.0) ==
        doctest::Approx(std::log2(1.0 + 10.0 / 11.0)).epsilon(1e-14));
  CHECK(rate_ignore_interference(cp, 0.0) ==
        doctest::Approx(std::log2(11.0)).epsilon(1e-14));
  CHECK(rate_ignore_interference(cp, 2.0) ==
        doctest::Approx(std::log2(1.0 + 10.0 / 41.0)).epsilon(1e-14));

  CHECK(rate_no_interference(cp) == doctest::Approx(3.4594316186).epsilon(1e-9));
  CHECK(rate_no_interference({1.0, 1.0, 1.0}) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(rate_no_interference({1e-12, 1.0, 1.0}) == doctest::Approx(0.0).epsilon(1e-9));

  CHECK_THROWS_AS(rate_ignore_interference(cp, -0.5), std::domain_error);
}

TEST_CASE("baseline rate ordering and monotonicity") {
  Xoshiro256pp rng(7);
  for (int i = 0; i < 200; ++i) {
    const ChannelParams cp(db_to_linear(-10 + 30 * rng.uniform()),
                           db_to_linear(-10 + 30 * rng.uniform()),
                           db_to_linear(-3 + 6 * rng.uniform()));
    const double g = 2.0 * rng.uniform();
    CHECK(rate_ignore_interference(cp, g) <= rate_no_interference(cp) + 1e-12);
  }
  // Equality exactly when gamma^2 q vanishes.
  const ChannelParams cp(5.0, 3.0, 1.0);
  CHECK(rate_ignore_interference(cp, 0.0) == rate_no_interference(cp));
  CHECK(rate_ignore_interference(cp, 0.1) < rate_no_interference(cp));

  double prev_ig = -1.0, prev_no = -1.0;
  for (double p = 0.5; p <= 50.0; p += 0.5) {
    const ChannelParams grid(p, 3.0, 1.0);
    const double ig = rate_ignore_interference(grid, 1.3);
    const double no = rate_no_interference(grid);
    CHECK(ig > prev_ig);
    CHECK(no > prev_no);
    prev_ig = ig;
    prev_no = no;
  }
}
