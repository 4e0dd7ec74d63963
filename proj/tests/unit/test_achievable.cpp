#include <cmath>
#include <numbers>

#include "cograte/achievable.hpp"
#include "cograte/rng.hpp"
#include "doctest.h"

using namespace cograte;

TEST_CASE("beta coefficient closed forms") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  CHECK(beta_coeff(cp, 0.0, 2.1) == doctest::Approx(10.0 / 21.0).epsilon(1e-14));
  CHECK(beta_coeff(cp, 1.0, 0.0) == doctest::Approx(20.0 / 21.0).epsilon(1e-14));
  CHECK(beta_coeff(cp, 1.0, std::numbers::pi) == doctest::Approx(0.0).scale(1.0));
  CHECK_THROWS_AS(beta_coeff({1.0, 1.0, 2.0}, 0.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(beta_coeff(cp, 1.5, 0.0), std::domain_error);
  CHECK_THROWS_AS(beta_coeff(cp, 0.5, 4.0), std::domain_error);
}

TEST_CASE("llse error at alpha = 0 reduces to the treat-as-noise identity") {
  // (1-b)^2 p + b^2 q + b^2 with b = p/(p+q+1) gives p/err = 1 + p/(q+1).
  Xoshiro256pp rng(3);
  for (int i = 0; i < 50; ++i) {
    const double p = db_to_linear(-10 + 30 * rng.uniform());
    const double q = db_to_linear(-10 + 30 * rng.uniform());
    const ChannelParams cp(p, q, 1.0);
    const double dphi = std::numbers::pi * rng.uniform();
    const double err = llse_error(cp, 0.0, dphi, dphi);
    CHECK(p / err == doctest::Approx(1.0 + p / (q + 1.0)).epsilon(1e-12));
  }
}

TEST_CASE("llse error preconditions") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  CHECK_THROWS_AS(llse_error(cp, 0.5, 0.2, 0.3), std::domain_error);
  CHECK(llse_error(cp, 0.5, 0.3, -0.2) > 0.0);
}

TEST_CASE("smaller actual phase can only shrink the error") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  for (const double dphi : {0.2, 0.8, 2.0}) {
    const double at_edge = llse_error(cp, 0.6, dphi, dphi);
    for (int i = 0; i <= 20; ++i) {
      const double phi = dphi * i / 20.0;
      CHECK(llse_error(cp, 0.6, dphi, phi) <= at_edge + 1e-12);
    }
  }
}

TEST_CASE("zero phase budget recovers the clean dirty-paper rate") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const RateReport r = achievable_rate(cp, PhaseBudget{0.0});
  CHECK(r.rate == doctest::Approx(std::log2(11.0)).epsilon(1e-9));
  CHECK(r.params.at("alpha") == doctest::Approx(10.0 / 11.0).epsilon(1e-4));
  CHECK(r.kind == RateKind::kAchievable);

  // The matched scaling holds for other powers too.
  for (const double p : {0.5, 3.0, 40.0}) {
    const RateReport rr = achievable_rate({p, 7.0, 1.0}, PhaseBudget{0.0});
    CHECK(rr.rate == doctest::Approx(std::log2(1.0 + p)).epsilon(1e-9));
    CHECK(rr.params.at("alpha") == doctest::Approx(p / (p + 1.0)).epsilon(1e-4));
  }
}

TEST_CASE("full phase uncertainty falls back to ignoring the interference") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const RateReport r = achievable_rate(cp, PhaseBudget{std::numbers::pi});
  CHECK(r.rate == doctest::Approx(std::log2(1.0 + 10.0 / 11.0)).epsilon(1e-9));
  CHECK(r.params.at("alpha") == doctest::Approx(0.0).scale(1.0));
}

TEST_CASE("achievable rate dominates treat-as-noise and shrinks with the budget") {
  Xoshiro256pp rng(5);
  for (int i = 0; i < 100; ++i) {
    const ChannelParams cp(db_to_linear(-10 + 30 * rng.uniform()),
                           db_to_linear(-10 + 30 * rng.uniform()), 1.0);
    const double dphi = std::numbers::pi * rng.uniform();
    const double rate = achievable_rate(cp, PhaseBudget{dphi}).rate;
    CHECK(rate >= rate_ignore_interference(cp, 1.0) - 1e-9);
  }
  const ChannelParams cp(10.0, 10.0, 1.0);
  double prev = 1e9;
  for (int i = 0; i <= 63; ++i) {
    const double rate =
        achievable_rate(cp, PhaseBudget{std::numbers::pi * i / 63.0}).rate;
    CHECK(rate <= prev + 1e-12);
    prev = rate;
  }
}

TEST_CASE("phase budget validation") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  CHECK_THROWS_AS(achievable_rate(cp, PhaseBudget{-0.1}), std::domain_error);
  CHECK_THROWS_AS(achievable_rate(cp, PhaseBudget{4.0}), std::domain_error);
  CHECK_THROWS_AS(achievable_rate(cp, PhaseBudget{0.5, 0.8, 0.2}), std::domain_error);
  CHECK_THROWS_AS(achievable_rate({1.0, 1.0, 3.0}, PhaseBudget{0.5}), std::domain_error);
  // Restricted alpha interval is honored and echoed.
  const RateReport r = achievable_rate(cp, PhaseBudget{0.2, 0.3, 0.6});
  const double a = r.params.at("alpha");
  CHECK(a >= 0.3);
  CHECK(a <= 0.6);
}

TEST_CASE("sectoring divides the budget and the rate") {
  const ChannelParams cp(10.0, 10.0, 1.0);
  const SectorPlan one = sectoring_rate(cp, 1);
  CHECK(one.rate ==
        doctest::Approx(achievable_rate(cp, PhaseBudget{std::numbers::pi}).rate)
            .epsilon(1e-12));
  for (const int k : {1, 2, 5, 17, 56}) {
    const SectorPlan plan = sectoring_rate(cp, k);
    const RateReport inner =
        achievable_rate(cp, PhaseBudget{std::numbers::pi / k});
    CHECK(plan.rate <= inner.rate + 1e-12);
    CHECK(plan.rate == doctest::Approx(inner.rate / k).epsilon(1e-12));
    CHECK(plan.residual == doctest::Approx(inner.params.at("llse_error")).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sectoring_rate(cp, 0), std::domain_error);
}

TEST_CASE("sector search matches exhaustive enumeration") {
  // Very low SIR: tens of sectors, consistent with k ~ pi sqrt(q).
  const ChannelParams low(0.01, db_to_linear(25.0), 1.0);
  SectorPlan best_by_loop = sectoring_rate(low, 1);
  for (int k = 2; k <= 200; ++k) {
    const SectorPlan plan = sectoring_rate(low, k);
    if (plan.rate > best_by_loop.rate) best_by_loop = plan;
  }
  const SectorPlan found = optimize_sectors(low, 200);
  CHECK(found.k == best_by_loop.k);
  CHECK(found.rate == doctest::Approx(best_by_loop.rate).epsilon(1e-12));
  CHECK(found.k == 56);
  CHECK(found.beats_ignore);

  // High SIR: sectoring collapses to a single sector and wins nothing.
  const ChannelParams high(10.0, 1.0, 1.0);
  const SectorPlan plan = optimize_sectors(high, 64);
  CHECK((plan.k == 1 || !plan.beats_ignore));

  // Degenerate search space.
  const SectorPlan single = optimize_sectors(low, 1);
  CHECK(single.k == 1);

  // The winner dominates sampled candidates.
  Xoshiro256pp rng(9);
  for (int i = 0; i < 3; ++i) {
    const ChannelParams cp(db_to_linear(-20 + 25 * rng.uniform()),
                           db_to_linear(5 + 20 * rng.uniform()), 1.0);
    const SectorPlan winner = optimize_sectors(cp, 128);
    for (const int k : {1, 2, 3, 8, 32, 128}) {
      CHECK(winner.rate >= sectoring_rate(cp, k).rate - 1e-12);
    }
  }
}

TEST_CASE("low-SIR approximation tracks the sectored rate in its regime") {
  for (const double q_db : {20.0, 25.0, 30.0}) {
    const double q = db_to_linear(q_db);
    for (const double p_over_q : {0.001, 0.01}) {
      const ChannelParams cp(p_over_q * q, q, 1.0);
      const int k_star = optimize_sectors(cp, 256).k;
      for (const int k : {k_star / 2, k_star, 2 * k_star}) {
        if (k < 2) continue;
        const double exact = sectoring_rate(cp, k).rate;
        const double approx = low_sir_approx(cp, k);
        CHECK(std::abs(approx - exact) <= 0.25 * exact);
      }
    }
  }
}

TEST_CASE("low-SIR approximation limits") {
  const ChannelParams cp(0.01, db_to_linear(25.0), 1.0);
  // Large k: sin(pi/k) -> pi/k, so the residual power is ~ q pi^2 / k^2.
  for (const int k : {64, 128, 256}) {
    const double via_sin = low_sir_approx(cp, k);
    const double via_linear =
        std::log2(1.0 + cp.p / (1.0 + cp.q * std::numbers::pi * std::numbers::pi /
                                          (static_cast<double>(k) * k))) / k;
    CHECK(via_sin == doctest::Approx(via_linear).epsilon(0.01));
  }
  // Vanishing signal power kills the rate.
  CHECK(low_sir_approx({1e-300, 100.0, 1.0}, 8) == doctest::Approx(0.0).scale(1e-12));
}
