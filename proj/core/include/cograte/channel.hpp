#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace cograte {

/// Thrown when an iterative routine fails to converge or produces an
/// unusable result. what() carries the diagnostics.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& message)
      : std::runtime_error(message) {}
};

double db_to_linear(double db);
double linear_to_db(double linear);

/// Channel powers on a linear scale (mean square of the complex symbol).
/// `p` is the transmit power budget of the secondary link, `q` the power of
/// the primary's interference at the secondary receiver, `n` the receiver
/// noise power. All rates produced from these are in bits per complex symbol.
struct ChannelParams {
  double p;
  double q;
  double n;

  ChannelParams(double p_, double q_, double n_ = 1.0);
  static ChannelParams from_db(double p_db, double q_db, double n_db = 0.0);

  /// Same channel rescaled so the noise power is one (p/n, q/n, 1).
  ChannelParams unit_noise() const { return {p / n, q / n, 1.0}; }
  bool has_unit_noise() const;
};

/// Amplitude distribution of the interference channel fade: either a fixed
/// amplitude or Rayleigh with scale parameter sigma^2.
class FadeModel {
 public:
  static FadeModel fixed(double gamma);
  static FadeModel rayleigh(double sigma2);

  bool is_rayleigh() const { return rayleigh_; }
  double gamma() const;   // fixed amplitude; throws for Rayleigh models
  double sigma2() const;  // Rayleigh scale; throws for fixed models

  /// Rayleigh density (g/sigma2) exp(-g^2 / (2 sigma2)) for g >= 0.
  double pdf(double g) const;
  double cdf(double g) const;

 private:
  FadeModel(bool is_rayleigh, double value) : rayleigh_(is_rayleigh), value_(value) {}

  bool rayleigh_;
  double value_;
};

enum class RateKind { kUpperBound, kAchievable, kBaseline, kEffective };

/// A computed rate in bits per complex symbol, together with the inputs and
/// any optimized internal variables (alpha, k, tau, D, ...) that produced it.
struct RateReport {
  double rate = 0.0;
  RateKind kind = RateKind::kBaseline;
  std::map<std::string, double> params;
};

/// log2(1 + p / (n + gamma^2 q)): decode treating the faded interference as
/// additional Gaussian noise. Needs no knowledge of the interference at all.
double rate_ignore_interference(const ChannelParams& cp, double gamma);

/// log2(1 + p/n): capacity with no interference, which is also the rate with
/// perfect (amplitude and phase) interference knowledge at the transmitter.
double rate_no_interference(const ChannelParams& cp);

}  // namespace cograte
