#pragma once

#include <cstdint>

#include "cograte/channel.hpp"
#include "cograte/feedback.hpp"

namespace cograte {

/// A reproducible batch of i.i.d. trials. Identical (seed, count, parameters)
/// give bit-identical results regardless of thread count: trials are sharded
/// into fixed-size blocks with seeds derived from (seed, shard index) and the
/// per-shard sums are combined in shard order with compensated summation.
struct SampleBatch {
  std::uint64_t seed = 0;
  std::int64_t count = 0;
};

struct MomentEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t count = 0;
};

/// Empirical mean of |U - beta(delta_phi) Y|^2 with U = X + alpha S and
/// Y = X + S e^{j phi} + Z, where X, S, Z are independent complex Gaussians
/// of powers p, q, n. This is the sampling counterpart of llse_error and is
/// deliberately independent of that code path. Requires count >= 1e4.
MomentEstimate mc_llse_error(const ChannelParams& cp, double alpha,
                             double delta_phi, double phi,
                             const SampleBatch& batch);

struct ErrorSummary {
  double mean = 0.0;
  double stddev = 0.0;
  double tail_one_sided = 0.0;  // Pr(error > delta_phi)
  double tail_two_sided = 0.0;  // Pr(|error| > delta_phi)
};

struct PhaseEstimatorStats {
  ErrorSummary linearized;  // Im(e^{-j phi} sum T) / (tau gain q)
  ErrorSummary exact;       // arg(sum T) - phi, wrapped to (-pi, pi]
  std::int64_t count = 0;
};

/// Simulates the dead-zone correlator: per trial, tau samples of
/// T_i = (gain S_i + zeta_i)^* (S_i e^{j phi} + Z_i) are accumulated and the
/// phase error is summarized both in the small-error linearization and as the
/// exact angle. Requires unit noise power and tau >= 1.
PhaseEstimatorStats mc_phase_estimator(const ChannelParams& cp,
                                       const QuantizerModel& qm,
                                       std::int64_t tau, double true_phi,
                                       double delta_phi,
                                       const SampleBatch& batch);

/// Empirical Pr(upper_bound_fade(gamma) < rate) over Rayleigh-sampled gamma.
/// Sampling cross-check of the outage interval construction; the std_error
/// is the binomial one. Requires count >= 1e5 and a Rayleigh fade model.
MomentEstimate mc_outage(const ChannelParams& cp, const FadeModel& fade,
                         double committed_rate, const SampleBatch& batch);

struct SampleMoments {
  double x_power = 0.0;
  double s_power = 0.0;
  double z_power = 0.0;
};

/// Empirical second moments of the X, S, Z draws — sampler sanity check.
SampleMoments mc_sample_moments(const ChannelParams& cp, const SampleBatch& batch);

}  // namespace cograte
