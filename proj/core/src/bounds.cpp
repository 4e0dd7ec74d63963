#include "cograte/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "cograte/optimize.hpp"

namespace cograte {
namespace {

constexpr double kGammaTol = 1e-10;  // bisection tolerance on the fade axis

void require_rayleigh(const FadeModel& fade, const char* where) {
  if (!fade.is_rayleigh()) {
    throw std::domain_error(std::string(where) + ": fade model must be Rayleigh");
  }
}

// The derivative sign of the bound follows (p+n)/g + g q, so the minimum is
// analytic; still, sample both branches to catch any parameter regime where
// the unimodality assumption would silently break.
void check_unimodal(const ChannelParams& cp, double g_star) {
  double prev = upper_bound_fade(cp, g_star * 1e-3);
  for (double g = g_star * 1e-2; g < g_star * 0.99; g *= 10.0) {
    const double v = upper_bound_fade(cp, g);
    if (v > prev + 1e-9) {
      throw NumericalError("outage bound: not decreasing left of gamma*");
    }
    prev = v;
  }
  prev = upper_bound_fade(cp, g_star * 1.01);
  for (double g = g_star * 10.0; g < g_star * 1.01e3; g *= 10.0) {
    const double v = upper_bound_fade(cp, g);
    if (v < prev - 1e-9) {
      throw NumericalError("outage bound: not increasing right of gamma*");
    }
    prev = v;
  }
}

// Crossing of the bound with `rate` on the decreasing branch (0, g_star).
double crossing_below(const ChannelParams& cp, double g_star, double rate) {
  double lo = 0.5 * g_star;
  for (int i = 0; i < 4000 && upper_bound_fade(cp, lo) < rate; ++i) lo *= 0.5;
  if (upper_bound_fade(cp, lo) < rate) {
    throw NumericalError("outage bound: no bracket below gamma* for rate " +
                         std::to_string(rate));
  }
  auto f = [&](double g) { return upper_bound_fade(cp, g) - rate; };
  return bisect_root(f, lo, g_star, kGammaTol);
}

// Crossing on the increasing branch (g_star, inf).
double crossing_above(const ChannelParams& cp, double g_star, double rate) {
  double hi = 2.0 * g_star;
  for (int i = 0; i < 4000 && upper_bound_fade(cp, hi) < rate; ++i) hi *= 2.0;
  if (upper_bound_fade(cp, hi) < rate) {
    throw NumericalError("outage bound: no bracket above gamma* for rate " +
                         std::to_string(rate));
  }
  auto f = [&](double g) { return upper_bound_fade(cp, g) - rate; };
  return bisect_root(f, g_star, hi, kGammaTol);
}

}  // namespace

double upper_bound_phase(const ChannelParams& cp) {
  const double s = cp.p + cp.q + cp.n;
  return 0.5 * std::log2(s * s / (4.0 * cp.q * cp.n));
}

double upper_bound_fade(const ChannelParams& cp, double gamma) {
  if (!(gamma > 0.0)) {
    throw std::domain_error(
        "upper_bound_fade: the bound diverges as gamma -> 0; gamma must be > 0");
  }
  const double g2q = gamma * gamma * cp.q;
  const double s = cp.p + g2q + cp.n;
  return 0.5 * std::log2(s * s / (4.0 * g2q * cp.n));
}

FadeBoundMinimum upper_bound_fade_minimum(const ChannelParams& cp) {
  const double g_star = std::sqrt((cp.p + cp.n) / cp.q);
  return {g_star, upper_bound_fade(cp, g_star)};
}

OutageInterval outage_interval(const ChannelParams& cp, const FadeModel& fade,
                               double committed_rate) {
  require_rayleigh(fade, "outage_interval");
  if (!(committed_rate >= 0.0)) {
    throw std::domain_error("outage_interval: committed rate must be >= 0");
  }
  const FadeBoundMinimum m = upper_bound_fade_minimum(cp);
  check_unimodal(cp, m.gamma);
  if (committed_rate <= m.rate) {
    return {m.gamma, m.gamma, 0.0};
  }
  const double g_lo = crossing_below(cp, m.gamma, committed_rate);
  const double g_hi = crossing_above(cp, m.gamma, committed_rate);
  const double s2 = fade.sigma2();
  const double prob = std::exp(-g_lo * g_lo / (2.0 * s2)) -
                      std::exp(-g_hi * g_hi / (2.0 * s2));
  return {g_lo, g_hi, prob};
}

double outage_lower_bound(const ChannelParams& cp, const FadeModel& fade,
                          double committed_rate) {
  return outage_interval(cp, fade, committed_rate).probability;
}

double outage_lower_bound(const OutageQuery& query) {
  const auto* committed = std::get_if<CommittedRate>(&query.target);
  if (committed == nullptr) {
    throw std::domain_error("outage_lower_bound: query must carry a committed rate");
  }
  return outage_lower_bound(query.cp, query.fade, committed->rate);
}

double rate_vs_outage(const ChannelParams& cp, const FadeModel& fade,
                      double p_out) {
  require_rayleigh(fade, "rate_vs_outage");
  if (!(p_out >= 0.0) || !(p_out <= 1.0)) {
    throw std::domain_error("rate_vs_outage: p_out must lie in [0, 1]");
  }
  if (p_out == 1.0) {
    // Every finite rate keeps the bound's outage below one.
    return std::numeric_limits<double>::infinity();
  }
  const double r_min = upper_bound_fade_minimum(cp).rate;
  // outage_lower_bound(r_min) = 0 <= p_out; expand until the target is bracketed.
  double lo = r_min;
  double span = 1.0;
  double hi = r_min + span;
  int expansions = 0;
  while (outage_lower_bound(cp, fade, hi) <= p_out) {
    lo = hi;
    span *= 2.0;
    hi = r_min + span;
    if (++expansions > 200) {
      throw NumericalError("rate_vs_outage: failed to bracket p_out=" +
                           std::to_string(p_out));
    }
  }
  for (int i = 0; i < 200 && (hi - lo) > 1e-10 * std::max(1.0, std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (outage_lower_bound(cp, fade, mid) <= p_out) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

double rate_vs_outage(const OutageQuery& query) {
  const auto* target = std::get_if<TargetOutage>(&query.target);
  if (target == nullptr) {
    throw std::domain_error("rate_vs_outage: query must carry a target outage");
  }
  return rate_vs_outage(query.cp, query.fade, target->p_out);
}

std::vector<std::pair<double, double>> rate_vs_rayleigh_param(
    const ChannelParams& cp, double p_out,
    const std::vector<double>& sigma2_grid) {
  if (sigma2_grid.empty()) {
    throw std::domain_error("rate_vs_rayleigh_param: sigma2 grid is empty");
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(sigma2_grid.size());
  for (const double s2 : sigma2_grid) {
    curve.emplace_back(s2, rate_vs_outage(cp, FadeModel::rayleigh(s2), p_out));
  }
  return curve;
}

}  // namespace cograte
