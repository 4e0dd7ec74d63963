#pragma once

#include <utility>
#include <variant>
#include <vector>

#include "cograte/channel.hpp"

namespace cograte {

struct CommittedRate {
  double rate = 0.0;  // bits per complex symbol the transmitter commits to
};

struct TargetOutage {
  double p_out = 0.0;  // acceptable outage probability
};

/// Inputs for the Rayleigh outage analysis. The fade model must be Rayleigh.
struct OutageQuery {
  ChannelParams cp;
  FadeModel fade;
  std::variant<CommittedRate, TargetOutage> target;
};

/// Upper bound on the rate when the interference phase is unknown at the
/// transmitter: (1/2) log2((p+q+n)^2 / (4 q n)). Reported as computed, with
/// no clamping — the bound is loose at low SIR and may cross the reference
/// curves.
double upper_bound_phase(const ChannelParams& cp);

/// Fade-amplitude generalization: (1/2) log2((p + g^2 q + n)^2 / (4 g^2 q n)).
/// Coincides with upper_bound_phase at gamma = 1. The bound diverges as
/// gamma -> 0, so gamma must be strictly positive.
double upper_bound_fade(const ChannelParams& cp, double gamma);

struct FadeBoundMinimum {
  double gamma;  // argmin, sqrt((p+n)/q)
  double rate;   // value there, (1/2) log2(1 + p/n)
};

/// Unique minimum of upper_bound_fade over gamma. The bound decreases on
/// (0, gamma*) and increases on (gamma*, inf).
FadeBoundMinimum upper_bound_fade_minimum(const ChannelParams& cp);

struct OutageInterval {
  double gamma_lo = 0.0;  // fade interval on which the bound dips below rate
  double gamma_hi = 0.0;
  double probability = 0.0;  // Rayleigh mass of (gamma_lo, gamma_hi)
};

/// P(upper_bound_fade(gamma) < rate) for Rayleigh-distributed gamma: a lower
/// bound on the outage probability at the committed rate. The bound is
/// unimodal in gamma, so the event set is an interval located by bracketed
/// bisection on each side of the minimizer; the probability is
/// exp(-g_lo^2/(2 s2)) - exp(-g_hi^2/(2 s2)). Empty (zero) when the rate
/// does not exceed the minimum of the bound.
OutageInterval outage_interval(const ChannelParams& cp, const FadeModel& fade,
                               double committed_rate);

double outage_lower_bound(const ChannelParams& cp, const FadeModel& fade,
                          double committed_rate);
double outage_lower_bound(const OutageQuery& query);

/// Largest committed rate whose outage lower bound stays within p_out,
/// sup{ r : outage_lower_bound(r) <= p_out }, found by bisection on r.
/// Nondecreasing in p_out; returns +infinity when p_out = 1 (no finite rate
/// is ruled out).
double rate_vs_outage(const ChannelParams& cp, const FadeModel& fade,
                      double p_out);
double rate_vs_outage(const OutageQuery& query);

/// rate_vs_outage evaluated per Rayleigh parameter, as (sigma2, rate) pairs.
std::vector<std::pair<double, double>> rate_vs_rayleigh_param(
    const ChannelParams& cp, double p_out,
    const std::vector<double>& sigma2_grid);

}  // namespace cograte
