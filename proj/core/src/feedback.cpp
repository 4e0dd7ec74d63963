#include "cograte/feedback.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "cograte/achievable.hpp"
#include "cograte/special.hpp"

namespace cograte {
namespace {

void require_unit_noise(const ChannelParams& cp, const char* where) {
  if (!cp.has_unit_noise()) {
    throw std::domain_error(std::string(where) +
                            ": the protocol analysis assumes unit noise power");
  }
}

void validate_plan(const ChannelParams& cp, const FeedbackPlan& plan,
                   const char* where) {
  if (plan.l_coh < 1) {
    throw std::domain_error(std::string(where) + ": l_coh must be >= 1");
  }
  if (!(plan.confidence > 0.0) || !(plan.confidence < 1.0)) {
    throw std::domain_error(std::string(where) + ": confidence must lie in (0, 1)");
  }
  if (plan.d_grid.empty() || plan.dphi_grid.empty()) {
    throw std::domain_error(std::string(where) + ": candidate grids are empty");
  }
  for (const double d : plan.d_grid) {
    if (!(d > 0.0) || !(d < cp.q)) {
      throw std::domain_error(std::string(where) + ": distortion " +
                              std::to_string(d) + " outside (0, q)");
    }
  }
  for (const double dphi : plan.dphi_grid) {
    if (!(dphi > 0.0) || !(dphi < std::numbers::pi)) {
      throw std::domain_error(std::string(where) + ": delta_phi " +
                              std::to_string(dphi) + " outside (0, pi)");
    }
  }
}

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double ratio = std::log(hi / lo) / (points - 1);
  for (int i = 0; i < points; ++i) g[i] = lo * std::exp(ratio * i);
  return g;
}

}  // namespace

QuantizerModel::QuantizerModel(const ChannelParams& cp, double distortion_,
                               QuantizerKind kind_)
    : distortion(distortion_), kind(kind_) {
  if (!(distortion > 0.0) || !(distortion < cp.q)) {
    throw std::domain_error("QuantizerModel: distortion must lie in (0, q)");
  }
  const double q = cp.q;
  if (kind == QuantizerKind::kDistortionScaled) {
    gain = (q - distortion) / distortion;
    noise_var = (q - distortion) * q / distortion;
  } else {
    gain = (q - distortion) / q;
    noise_var = distortion * (q - distortion) / q;
  }
}

FeedbackPlan FeedbackPlan::with_default_grids(const ChannelParams& cp,
                                              std::int64_t l_coh,
                                              FeedbackMode mode) {
  FeedbackPlan plan;
  plan.l_coh = l_coh;
  plan.mode = mode;
  plan.d_grid = log_grid(0.01 * cp.q, 0.99 * cp.q, 40);
  plan.dphi_grid = log_grid(1e-3, std::numbers::pi / 2.0, 40);
  return plan;
}

double estimator_noise_power(const ChannelParams& cp, const QuantizerModel& qm) {
  const double q = cp.q;
  const double d = qm.distortion;
  if (!(d > 0.0) || !(d < q)) {
    throw std::domain_error("estimator_noise_power: distortion outside (0, q)");
  }
  if (qm.kind == QuantizerKind::kDistortionScaled) {
    return qm.gain * qm.gain * q + q * (q - d) / d + (q - d) / d;
  }
  return qm.gain * qm.gain * q + qm.noise_var * q + qm.noise_var;
}

double training_time_raw(const ChannelParams& cp, const QuantizerModel& qm,
                         double delta_phi, double confidence) {
  require_unit_noise(cp, "training_time");
  if (!(delta_phi > 0.0)) {
    throw std::domain_error("training_time: delta_phi must be > 0");
  }
  if (!(confidence > 0.0) || !(confidence < 1.0)) {
    throw std::domain_error("training_time: confidence must lie in (0, 1)");
  }
  const double qinv = inverse_gaussian_tail(confidence);
  const double eta2 = estimator_noise_power(cp, qm);
  const double denom = qm.gain * qm.gain * cp.q * cp.q * delta_phi * delta_phi;
  return qinv * qinv * eta2 / denom;
}

std::int64_t training_time(const ChannelParams& cp, const QuantizerModel& qm,
                           double delta_phi, double confidence) {
  const double raw = training_time_raw(cp, qm, delta_phi, confidence);
  if (raw <= 0.0) return 0;
  return static_cast<std::int64_t>(std::ceil(raw));
}

RateReport effective_rate_contiguous(const ChannelParams& cp,
                                     const FeedbackPlan& plan) {
  require_unit_noise(cp, "effective_rate_contiguous");
  validate_plan(cp, plan, "effective_rate_contiguous");
  const double l = static_cast<double>(plan.l_coh);

  struct Best {
    double r_eff = -1.0;
    double tau = 0.0, d = 0.0, dphi = 0.0, alpha = 0.0, p_boost = 0.0;
  } best;
  bool any_feasible = false;

  for (const double d : plan.d_grid) {
    const QuantizerModel qm(cp, d, plan.quantizer);
    const double bit_cost = std::log2(cp.q / d);  // rate-distortion bits/symbol
    for (const double dphi : plan.dphi_grid) {
      const std::int64_t tau = training_time(cp, qm, dphi, plan.confidence);
      if (tau >= plan.l_coh) continue;
      const double payload_syms = l - static_cast<double>(tau);
      const double p_boost = cp.p * l / payload_syms;
      const RateReport rr =
          achievable_rate({p_boost, cp.q, 1.0}, PhaseBudget{dphi});
      const double bits = payload_syms * rr.rate - static_cast<double>(tau) * bit_cost;
      if (bits <= 0.0) continue;
      any_feasible = true;
      const double r_eff = bits / l;
      if (r_eff > best.r_eff) {
        best = {r_eff, static_cast<double>(tau), d, dphi,
                rr.params.at("alpha"), p_boost};
      }
    }
  }

  const double fallback = rate_ignore_interference(cp, 1.0);
  RateReport report;
  report.kind = RateKind::kEffective;
  const bool use_fallback = best.r_eff < fallback;
  if (use_fallback) {
    report.rate = fallback;
    report.params = {{"l_coh", l},
                     {"confidence", plan.confidence},
                     {"tau", 0.0},
                     {"d", 0.0},
                     {"dphi", std::numbers::pi},
                     {"alpha", 0.0},
                     {"p_boost", cp.p},
                     {"used_fallback", 1.0},
                     {"training_feasible", any_feasible ? 1.0 : 0.0}};
  } else {
    report.rate = best.r_eff;
    report.params = {{"l_coh", l},
                     {"confidence", plan.confidence},
                     {"tau", best.tau},
                     {"d", best.d},
                     {"dphi", best.dphi},
                     {"alpha", best.alpha},
                     {"p_boost", best.p_boost},
                     {"used_fallback", 0.0},
                     {"training_feasible", 1.0}};
  }
  return report;
}

RateReport effective_rate_bursty(const ChannelParams& cp,
                                 const FeedbackPlan& plan) {
  require_unit_noise(cp, "effective_rate_bursty");
  validate_plan(cp, plan, "effective_rate_bursty");
  const double l = static_cast<double>(plan.l_coh);

  struct Best {
    double r_eff = -1.0;
    double tau_pk = 0.0, tau_dead = 0.0, d = 0.0, dphi = 0.0, alpha = 0.0,
           p1 = 0.0;
  } best;
  bool any_feasible = false;

  for (const double d : plan.d_grid) {
    const QuantizerModel qm(cp, d, plan.quantizer);
    for (const double dphi : plan.dphi_grid) {
      const std::int64_t tau_dead = training_time(cp, qm, dphi, plan.confidence);
      if (tau_dead + 1 >= plan.l_coh) continue;
      const double pk_bits = static_cast<double>(tau_dead) * std::log2(cp.q / d);

      // The transmitter is active for the preamble and the payload and silent
      // only in the dead zone, at one common power; spending the block energy
      // budget p*l over those l - tau_dead symbols fixes the boost.
      const double p1 = cp.p * l / (l - static_cast<double>(tau_dead));
      // Smallest preamble that carries the prescient-knowledge bits while the
      // receiver still treats the interference as noise.
      const double pk_rate = std::log2(1.0 + p1 / (1.0 + cp.q));
      const auto tau_pk_i =
          static_cast<std::int64_t>(std::ceil(pk_bits > 0.0 ? pk_bits / pk_rate : 0.0));
      const std::int64_t payload = plan.l_coh - tau_dead - tau_pk_i;
      if (payload < 1) continue;

      const RateReport rr = achievable_rate({p1, cp.q, 1.0}, PhaseBudget{dphi});
      const double bits = static_cast<double>(payload) * rr.rate;
      if (bits <= 0.0) continue;
      any_feasible = true;
      const double r_eff = bits / l;
      if (r_eff > best.r_eff) {
        best = {r_eff,
                static_cast<double>(tau_pk_i),
                static_cast<double>(tau_dead),
                d,
                dphi,
                rr.params.at("alpha"),
                p1};
      }
    }
  }

  RateReport report;
  report.kind = RateKind::kEffective;
  if (!any_feasible) {
    report.rate = 0.0;
    report.params = {{"l_coh", l},         {"confidence", plan.confidence},
                     {"tau_pk", 0.0},      {"tau_dead", 0.0},
                     {"d", 0.0},           {"dphi", 0.0},
                     {"alpha", 0.0},       {"p1", 0.0},
                     {"feasible", 0.0}};
    return report;
  }
  report.rate = best.r_eff;
  report.params = {{"l_coh", l},           {"confidence", plan.confidence},
                   {"tau_pk", best.tau_pk}, {"tau_dead", best.tau_dead},
                   {"d", best.d},          {"dphi", best.dphi},
                   {"alpha", best.alpha},  {"p1", best.p1},
                   {"feasible", 1.0}};
  return report;
}

}  // namespace cograte
