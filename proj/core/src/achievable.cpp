#include "cograte/achievable.hpp"

#include <cmath>
#include <numbers>

#include "cograte/optimize.hpp"

namespace cograte {
namespace {

constexpr double kAlphaTol = 1e-8;

void require_unit_noise(const ChannelParams& cp, const char* where) {
  if (!cp.has_unit_noise()) {
    throw std::domain_error(std::string(where) +
                            ": closed forms assume unit noise power; rescale "
                            "with ChannelParams::unit_noise()");
  }
}

void validate_budget(const PhaseBudget& pb) {
  if (!(pb.delta_phi >= 0.0) || !(pb.delta_phi <= std::numbers::pi)) {
    throw std::domain_error("PhaseBudget: delta_phi must lie in [0, pi]");
  }
  if (!(pb.alpha_lo >= 0.0) || !(pb.alpha_lo <= pb.alpha_hi) ||
      !(pb.alpha_hi <= 1.0)) {
    throw std::domain_error("PhaseBudget: need 0 <= alpha_lo <= alpha_hi <= 1");
  }
}

}  // namespace

double beta_coeff(const ChannelParams& cp, double alpha, double theta) {
  require_unit_noise(cp, "beta_coeff");
  if (!(alpha >= 0.0) || !(alpha <= 1.0)) {
    throw std::domain_error("beta_coeff: alpha must lie in [0, 1]");
  }
  if (!(std::abs(theta) <= std::numbers::pi)) {
    throw std::domain_error("beta_coeff: theta must lie in [-pi, pi]");
  }
  return (cp.p + alpha * std::cos(theta) * cp.q) / (cp.p + cp.q + 1.0);
}

double llse_error(const ChannelParams& cp, double alpha, double delta_phi,
                  double phi) {
  if (!(std::abs(phi) <= delta_phi)) {
    throw std::domain_error("llse_error: need |phi| <= delta_phi");
  }
  const double b = beta_coeff(cp, alpha, delta_phi);
  const double one_minus_b = 1.0 - b;
  return one_minus_b * one_minus_b * cp.p +
         (alpha * alpha + b * b - 2.0 * alpha * b * std::cos(phi)) * cp.q +
         b * b;
}

RateReport achievable_rate(const ChannelParams& cp, const PhaseBudget& pb) {
  require_unit_noise(cp, "achievable_rate");
  validate_budget(pb);
  const double dphi = pb.delta_phi;
  auto error_at = [&](double alpha) { return llse_error(cp, alpha, dphi, dphi); };

  ScalarOptimum interior =
      golden_section_min(error_at, pb.alpha_lo, pb.alpha_hi, kAlphaTol);
  if (!std::isfinite(interior.value)) {
    throw NumericalError("achievable_rate: alpha search did not converge");
  }
  double alpha = interior.x;
  double err = interior.value;
  for (const double endpoint : {pb.alpha_lo, pb.alpha_hi}) {
    const double e = error_at(endpoint);
    if (e < err) {
      alpha = endpoint;
      err = e;
    }
  }
  double rate = std::log2(cp.p / err);

  // alpha = 0 discards the interference knowledge and attains the
  // treat-as-noise rate exactly; snap to it if round-off left us below.
  double floored = 0.0;
  if (pb.alpha_lo == 0.0) {
    const double floor_rate = rate_ignore_interference(cp, 1.0);
    if (rate < floor_rate) {
      rate = floor_rate;
      alpha = 0.0;
      err = error_at(0.0);
      floored = 1.0;
    }
  }

  RateReport report;
  report.rate = rate;
  report.kind = RateKind::kAchievable;
  report.params = {{"p", cp.p},
                   {"q", cp.q},
                   {"n", cp.n},
                   {"delta_phi", dphi},
                   {"alpha", alpha},
                   {"llse_error", err},
                   {"floored_at_alpha0", floored}};
  return report;
}

SectorPlan sectoring_rate(const ChannelParams& cp, int k) {
  if (k < 1) throw std::domain_error("sectoring_rate: k must be >= 1");
  const RateReport inner =
      achievable_rate(cp, PhaseBudget{std::numbers::pi / k});
  SectorPlan plan;
  plan.k = k;
  plan.rate = inner.rate / k;
  plan.residual = inner.params.at("llse_error");
  plan.alpha = inner.params.at("alpha");
  return plan;
}

SectorPlan optimize_sectors(const ChannelParams& cp, int k_max) {
  if (k_max < 1) throw std::domain_error("optimize_sectors: k_max must be >= 1");
  SectorPlan best = sectoring_rate(cp, 1);
  for (int k = 2; k <= k_max; ++k) {
    const SectorPlan plan = sectoring_rate(cp, k);
    if (plan.rate > best.rate) best = plan;
  }
  best.beats_ignore = best.rate > rate_ignore_interference(cp, 1.0) + 1e-9;
  return best;
}

double low_sir_approx(const ChannelParams& cp, int k) {
  require_unit_noise(cp, "low_sir_approx");
  if (k < 1) throw std::domain_error("low_sir_approx: k must be >= 1");
  const double s = std::sin(std::numbers::pi / k);
  return std::log2(1.0 + cp.p / (1.0 + cp.q * s * s)) / k;
}

}  // namespace cograte
