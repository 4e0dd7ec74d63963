#pragma once

#include "cograte/channel.hpp"

namespace cograte {

/// Residual phase uncertainty and the search interval for the dirty-paper
/// scaling parameter alpha. The reported rates are worst case over the
/// residual phase, evaluated at its half-width delta_phi.
struct PhaseBudget {
  double delta_phi = 0.0;  // radians, in [0, pi]
  double alpha_lo = 0.0;   // alpha search interval, within [0, 1]
  double alpha_hi = 1.0;
};

/// Receiver LLSE gain beta(theta) = (p + alpha cos(theta) q) / (p + q + 1).
/// The closed forms in this module normalize the noise power to one; rescale
/// other channels with ChannelParams::unit_noise() first.
double beta_coeff(const ChannelParams& cp, double alpha, double theta);

/// Mean-square error of the LLSE estimate of the auxiliary codeword when the
/// receiver's gain assumes phase delta_phi but the actual phase is phi:
///   (1-b)^2 p + (a^2 + b^2 - 2 a b cos(phi)) q + b^2,  b = beta(delta_phi).
/// Requires |phi| <= delta_phi; the error only shrinks for |phi| < delta_phi.
double llse_error(const ChannelParams& cp, double alpha, double delta_phi,
                  double phi);

/// Best dirty-paper rate under the phase budget:
///   sup over alpha of log2(p / llse_error(alpha, dphi, dphi)).
/// Golden-section search plus explicit interval endpoints; alpha = 0 recovers
/// treating the interference as noise, so the reported rate is never below
/// that baseline (rate floored there if the search lands under it by
/// round-off). Report params carry the maximizing alpha and the error.
RateReport achievable_rate(const ChannelParams& cp, const PhaseBudget& pb);

struct SectorPlan {
  int k = 1;                 // number of sectors the phase circle is cut into
  double rate = 0.0;         // bits per complex symbol after 1/k time sharing
  double residual = 0.0;     // LLSE error at the sector half-width pi/k
  double alpha = 0.0;        // maximizing dirty-paper parameter
  bool beats_ignore = false; // set by optimize_sectors
};

/// Time sharing k dirty-paper codes matched to sector centers:
/// (1/k) * achievable_rate at delta_phi = pi/k.
SectorPlan sectoring_rate(const ChannelParams& cp, int k);

/// Exhaustive search over k in [1, k_max]; ties resolve to the smaller k.
/// beats_ignore records whether the winner improves on
/// rate_ignore_interference(gamma = 1) by more than 1e-9 bits (k = 1 with
/// alpha = 0 equals that baseline exactly, so the margin screens round-off).
SectorPlan optimize_sectors(const ChannelParams& cp, int k_max = 512);

/// Coarse sectoring model for the low-SIR regime, treating the residual
/// interference power as q sin^2(pi/k):
///   (1/k) log2(1 + p / (1 + q sin^2(pi/k))).
double low_sir_approx(const ChannelParams& cp, int k);

}  // namespace cograte
