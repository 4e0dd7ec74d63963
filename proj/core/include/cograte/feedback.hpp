#pragma once

#include <cstdint>
#include <vector>

#include "cograte/channel.hpp"

namespace cograte {

/// Linear-Gaussian model of the quantized interference copy the transmitter
/// ships to the receiver: shat = gain * s + zeta.
///
/// Two conventions are supported for (gain, Var zeta) at distortion D:
///   kDistortionScaled    gain = (Q-D)/D, Var zeta = (Q-D) Q / D  (default)
///   kBackwardTestChannel gain = (Q-D)/Q, Var zeta = D (Q-D) / Q
/// The second is the classical Gaussian rate-distortion backward channel and
/// is exposed as a sensitivity switch for the protocol analysis.
enum class QuantizerKind { kDistortionScaled, kBackwardTestChannel };

struct QuantizerModel {
  double distortion = 0.0;  // D, in (0, Q)
  double gain = 0.0;
  double noise_var = 0.0;   // variance of zeta
  QuantizerKind kind = QuantizerKind::kDistortionScaled;

  QuantizerModel(const ChannelParams& cp, double distortion,
                 QuantizerKind kind = QuantizerKind::kDistortionScaled);
};

enum class FeedbackMode { kContiguous, kBursty };

/// Inputs to the training-overhead optimization. The grids are the candidate
/// quantizer distortions and residual phase half-widths the optimizer scans.
struct FeedbackPlan {
  std::int64_t l_coh = 0;     // coherence length in symbols
  double confidence = 1e-3;   // acceptable probability the phase estimate
                              // misses the residual budget
  std::vector<double> d_grid;     // distortions, each in (0, q)
  std::vector<double> dphi_grid;  // residual half-widths, each in (0, pi)
  FeedbackMode mode = FeedbackMode::kContiguous;
  QuantizerKind quantizer = QuantizerKind::kDistortionScaled;

  /// Plan with the default 40-point log-spaced grids:
  /// D in (0.01 q, 0.99 q), delta_phi in (1e-3, pi/2).
  static FeedbackPlan with_default_grids(
      const ChannelParams& cp, std::int64_t l_coh,
      FeedbackMode mode = FeedbackMode::kContiguous);
};

/// Second moment of the per-symbol correlator perturbation eta:
///   gain^2 q + q (q-D)/D + (q-D)/D        (kDistortionScaled)
///   gain^2 q + noise_var q + noise_var    (kBackwardTestChannel)
/// The first form follows the protocol analysis as printed; see
/// mc_phase_estimator for the simulation it is checked against.
double estimator_noise_power(const ChannelParams& cp, const QuantizerModel& qm);

/// Dead-zone length needed to estimate the phase within delta_phi except with
/// probability `confidence`:
///   (Qinv(confidence))^2 E[eta^2] / (gain^2 q^2 delta_phi^2),
/// with Qinv the inverse Gaussian tail. training_time is the integer ceiling;
/// the _raw form is the formula value.
double training_time_raw(const ChannelParams& cp, const QuantizerModel& qm,
                         double delta_phi, double confidence);
std::int64_t training_time(const ChannelParams& cp, const QuantizerModel& qm,
                           double delta_phi, double confidence);

/// Streaming operation: each block trains from prescient knowledge shipped
/// inside the previous block's payload. Maximizes
///   [(l-tau) C(p l/(l-tau)) - tau log2(q/D)] / l
/// over the plan grids, where C is the dirty-paper rate at the residual
/// phase and the boosted power. The candidate set always includes the
/// no-training fallback that treats interference as noise, so the reported
/// rate is at least that baseline. Params echo the winning tau, D, delta_phi
/// and alpha, plus flags `used_fallback` and `training_feasible`.
RateReport effective_rate_contiguous(const ChannelParams& cp,
                                     const FeedbackPlan& plan);

/// Packet operation: every packet bootstraps its own estimate. The prescient
/// knowledge (tau_dead * log2(q/D) bits) must decode while treating the
/// interference as noise, which pins the preamble length tau_pk through a
/// fixed point with the power boost p1 = p l/(l - tau_pk - tau_dead); the
/// payload then runs at C(p1). Infeasible plans report rate 0 with
/// `feasible` = 0 in params.
RateReport effective_rate_bursty(const ChannelParams& cp,
                                 const FeedbackPlan& plan);

}  // namespace cograte
