#include "cograte/channel.hpp"

#include <cmath>

namespace cograte {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
  if (!(linear > 0.0)) {
    throw std::domain_error("linear_to_db: value must be positive, got " +
                            std::to_string(linear));
  }
  return 10.0 * std::log10(linear);
}

ChannelParams::ChannelParams(double p_, double q_, double n_)
    : p(p_), q(q_), n(n_) {
  if (!(p > 0.0) || !(q > 0.0) || !(n > 0.0)) {
    throw std::domain_error("ChannelParams: powers must be positive (p=" +
                            std::to_string(p_) + ", q=" + std::to_string(q_) +
                            ", n=" + std::to_string(n_) + ")");
  }
}

ChannelParams ChannelParams::from_db(double p_db, double q_db, double n_db) {
  return {db_to_linear(p_db), db_to_linear(q_db), db_to_linear(n_db)};
}

bool ChannelParams::has_unit_noise() const { return std::abs(n - 1.0) <= 1e-12; }

FadeModel FadeModel::fixed(double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::domain_error("FadeModel::fixed: amplitude must be >= 0");
  }
  return {false, gamma};
}

FadeModel FadeModel::rayleigh(double sigma2) {
  if (!(sigma2 > 0.0)) {
    throw std::domain_error("FadeModel::rayleigh: sigma2 must be > 0");
  }
  return {true, sigma2};
}

double FadeModel::gamma() const {
  if (rayleigh_) throw std::domain_error("FadeModel::gamma: model is Rayleigh");
  return value_;
}

double FadeModel::sigma2() const {
  if (!rayleigh_) throw std::domain_error("FadeModel::sigma2: model is fixed-fade");
  return value_;
}

double FadeModel::pdf(double g) const {
  const double s2 = sigma2();
  if (g < 0.0) return 0.0;
  return (g / s2) * std::exp(-g * g / (2.0 * s2));
}

double FadeModel::cdf(double g) const {
  const double s2 = sigma2();
  if (g <= 0.0) return 0.0;
  return -std::expm1(-g * g / (2.0 * s2));
}

double rate_ignore_interference(const ChannelParams& cp, double gamma) {
  if (!(gamma >= 0.0)) {
    throw std::domain_error("rate_ignore_interference: fade amplitude must be >= 0");
  }
  return std::log2(1.0 + cp.p / (cp.n + gamma * gamma * cp.q));
}

double rate_no_interference(const ChannelParams& cp) {
  return std::log2(1.0 + cp.p / cp.n);
}

}  // namespace cograte
