#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace cograte {

/// splitmix64 step; used to expand user seeds into generator state and to
/// derive independent per-shard streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Seed for shard `index` of a batch started from `seed`. The mapping is a
/// pure function, so sharded runs reproduce regardless of thread count.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  return splitmix64(s);
}

/// xoshiro256++ (Blackman & Vigna). Small, fast and fully specified, so Monte
/// Carlo results are reproducible for a given seed independent of the
/// standard library's distribution implementations.
class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  /// Standard normal pair via Box-Muller.
  void normal_pair(double& z0, double& z1) {
    const double r = std::sqrt(-2.0 * std::log(uniform_pos()));
    const double t = 2.0 * std::numbers::pi * uniform();
    z0 = r * std::cos(t);
    z1 = r * std::sin(t);
  }

  /// Circularly symmetric complex Gaussian with E|z|^2 = power
  /// (variance power/2 on each of the real and imaginary axes).
  std::complex<double> complex_gaussian(double power) {
    double z0 = 0.0, z1 = 0.0;
    normal_pair(z0, z1);
    const double s = std::sqrt(0.5 * power);
    return {s * z0, s * z1};
  }

  /// Rayleigh amplitude with scale parameter sigma2.
  double rayleigh(double sigma2) {
    return std::sqrt(-2.0 * sigma2 * std::log(uniform_pos()));
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

}  // namespace cograte
