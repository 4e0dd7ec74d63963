#include "cograte/mc.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "cograte/achievable.hpp"
#include "cograte/bounds.hpp"
#include "cograte/parallel.hpp"
#include "cograte/rng.hpp"

namespace cograte {
namespace {

constexpr std::int64_t kShardSize = 1 << 16;

// Kahan-compensated accumulator; shard results are reduced in index order so
// totals do not depend on the thread schedule.
struct Kahan {
  double sum = 0.0;
  double c = 0.0;

  void add(double v) {
    const double y = v - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  void merge(const Kahan& other) {
    add(other.sum);
    add(-other.c);
  }
};

struct ShardRange {
  std::int64_t first_trial;
  std::int64_t trials;
};

std::int64_t shard_count(std::int64_t count) {
  return (count + kShardSize - 1) / kShardSize;
}

ShardRange shard_range(std::int64_t shard, std::int64_t count) {
  const std::int64_t first = shard * kShardSize;
  return {first, std::min(kShardSize, count - first)};
}

void require_count(const SampleBatch& batch, std::int64_t minimum,
                   const char* where) {
  if (batch.count < minimum) {
    throw std::domain_error(std::string(where) + ": need at least " +
                            std::to_string(minimum) + " trials");
  }
}

double wrap_angle(double a) {
  while (a > std::numbers::pi) a -= 2.0 * std::numbers::pi;
  while (a <= -std::numbers::pi) a += 2.0 * std::numbers::pi;
  return a;
}

MomentEstimate reduce_moments(const std::vector<Kahan>& sums,
                              const std::vector<Kahan>& sq_sums,
                              std::int64_t count) {
  Kahan total, total_sq;
  for (const auto& s : sums) total.merge(s);
  for (const auto& s : sq_sums) total_sq.merge(s);
  const double mean = total.sum / static_cast<double>(count);
  const double var =
      (total_sq.sum - static_cast<double>(count) * mean * mean) /
      static_cast<double>(count - 1);
  return {mean, std::sqrt(std::max(var, 0.0) / static_cast<double>(count)),
          count};
}

}  // namespace

MomentEstimate mc_llse_error(const ChannelParams& cp, double alpha,
                             double delta_phi, double phi,
                             const SampleBatch& batch) {
  require_count(batch, 10'000, "mc_llse_error");
  const double beta = beta_coeff(cp, alpha, delta_phi);
  const std::complex<double> rot = std::polar(1.0, phi);
  const std::int64_t shards = shard_count(batch.count);
  std::vector<Kahan> sums(shards), sq_sums(shards);

  parallel::for_each_index(shards, [&](std::int64_t s) {
    const ShardRange r = shard_range(s, batch.count);
    Xoshiro256pp rng(derive_stream_seed(batch.seed, static_cast<std::uint64_t>(s)));
    Kahan sum, sq;
    for (std::int64_t i = 0; i < r.trials; ++i) {
      const std::complex<double> x = rng.complex_gaussian(cp.p);
      const std::complex<double> sv = rng.complex_gaussian(cp.q);
      const std::complex<double> z = rng.complex_gaussian(cp.n);
      const std::complex<double> u = x + alpha * sv;
      const std::complex<double> y = x + sv * rot + z;
      const double err = std::norm(u - beta * y);
      sum.add(err);
      sq.add(err * err);
    }
    sums[s] = sum;
    sq_sums[s] = sq;
  });

  return reduce_moments(sums, sq_sums, batch.count);
}

PhaseEstimatorStats mc_phase_estimator(const ChannelParams& cp,
                                       const QuantizerModel& qm,
                                       std::int64_t tau, double true_phi,
                                       double delta_phi,
                                       const SampleBatch& batch) {
  if (!cp.has_unit_noise()) {
    throw std::domain_error("mc_phase_estimator: correlator model assumes unit noise");
  }
  if (tau < 1) throw std::domain_error("mc_phase_estimator: tau must be >= 1");
  require_count(batch, 1, "mc_phase_estimator");

  const std::complex<double> rot = std::polar(1.0, true_phi);
  const std::complex<double> derot = std::conj(rot);
  const double scale = static_cast<double>(tau) * qm.gain * cp.q;
  const std::int64_t shards = shard_count(batch.count);

  struct ShardStats {
    Kahan lin_sum, lin_sq, ex_sum, ex_sq;
    std::int64_t lin_tail1 = 0, lin_tail2 = 0, ex_tail1 = 0, ex_tail2 = 0;
  };
  std::vector<ShardStats> stats(shards);

  parallel::for_each_index(shards, [&](std::int64_t s) {
    const ShardRange r = shard_range(s, batch.count);
    Xoshiro256pp rng(derive_stream_seed(batch.seed, static_cast<std::uint64_t>(s)));
    ShardStats st;
    for (std::int64_t i = 0; i < r.trials; ++i) {
      std::complex<double> t_sum{0.0, 0.0};
      for (std::int64_t k = 0; k < tau; ++k) {
        const std::complex<double> sv = rng.complex_gaussian(cp.q);
        const std::complex<double> noise = rng.complex_gaussian(cp.n);
        const std::complex<double> zeta = rng.complex_gaussian(qm.noise_var);
        const std::complex<double> shat = qm.gain * sv + zeta;
        t_sum += std::conj(shat) * (sv * rot + noise);
      }
      const double lin = std::imag(derot * t_sum) / scale;
      const double exact = wrap_angle(std::arg(t_sum) - true_phi);
      st.lin_sum.add(lin);
      st.lin_sq.add(lin * lin);
      st.ex_sum.add(exact);
      st.ex_sq.add(exact * exact);
      if (lin > delta_phi) ++st.lin_tail1;
      if (std::abs(lin) > delta_phi) ++st.lin_tail2;
      if (exact > delta_phi) ++st.ex_tail1;
      if (std::abs(exact) > delta_phi) ++st.ex_tail2;
    }
    stats[s] = st;
  });

  const double n = static_cast<double>(batch.count);
  auto summarize = [&](auto member_sum, auto member_sq, std::int64_t t1,
                       std::int64_t t2) {
    Kahan total, total_sq;
    for (const auto& st : stats) {
      total.merge(st.*member_sum);
      total_sq.merge(st.*member_sq);
    }
    ErrorSummary es;
    es.mean = total.sum / n;
    const double var = (total_sq.sum - n * es.mean * es.mean) / (n - 1.0);
    es.stddev = std::sqrt(std::max(var, 0.0));
    es.tail_one_sided = static_cast<double>(t1) / n;
    es.tail_two_sided = static_cast<double>(t2) / n;
    return es;
  };

  std::int64_t lt1 = 0, lt2 = 0, et1 = 0, et2 = 0;
  for (const auto& st : stats) {
    lt1 += st.lin_tail1;
    lt2 += st.lin_tail2;
    et1 += st.ex_tail1;
    et2 += st.ex_tail2;
  }

  PhaseEstimatorStats out;
  out.linearized = summarize(&ShardStats::lin_sum, &ShardStats::lin_sq, lt1, lt2);
  out.exact = summarize(&ShardStats::ex_sum, &ShardStats::ex_sq, et1, et2);
  out.count = batch.count;
  return out;
}

MomentEstimate mc_outage(const ChannelParams& cp, const FadeModel& fade,
                         double committed_rate, const SampleBatch& batch) {
  if (!fade.is_rayleigh()) {
    throw std::domain_error("mc_outage: fade model must be Rayleigh");
  }
  require_count(batch, 100'000, "mc_outage");
  const double s2 = fade.sigma2();
  const std::int64_t shards = shard_count(batch.count);
  std::vector<std::int64_t> hits(shards, 0);

  parallel::for_each_index(shards, [&](std::int64_t s) {
    const ShardRange r = shard_range(s, batch.count);
    Xoshiro256pp rng(derive_stream_seed(batch.seed, static_cast<std::uint64_t>(s)));
    std::int64_t h = 0;
    for (std::int64_t i = 0; i < r.trials; ++i) {
      const double g = rng.rayleigh(s2);
      // gamma == 0 has probability zero and an infinite bound: never an outage.
      if (g > 0.0 && upper_bound_fade(cp, g) < committed_rate) ++h;
    }
    hits[s] = h;
  });

  std::int64_t total = 0;
  for (const auto h : hits) total += h;
  const double n = static_cast<double>(batch.count);
  const double p = static_cast<double>(total) / n;
  return {p, std::sqrt(std::max(p * (1.0 - p), 0.0) / n), batch.count};
}

SampleMoments mc_sample_moments(const ChannelParams& cp, const SampleBatch& batch) {
  require_count(batch, 1, "mc_sample_moments");
  const std::int64_t shards = shard_count(batch.count);
  std::vector<Kahan> xs(shards), ss(shards), zs(shards);

  parallel::for_each_index(shards, [&](std::int64_t s) {
    const ShardRange r = shard_range(s, batch.count);
    Xoshiro256pp rng(derive_stream_seed(batch.seed, static_cast<std::uint64_t>(s)));
    Kahan x_acc, s_acc, z_acc;
    for (std::int64_t i = 0; i < r.trials; ++i) {
      x_acc.add(std::norm(rng.complex_gaussian(cp.p)));
      s_acc.add(std::norm(rng.complex_gaussian(cp.q)));
      z_acc.add(std::norm(rng.complex_gaussian(cp.n)));
    }
    xs[s] = x_acc;
    ss[s] = s_acc;
    zs[s] = z_acc;
  });

  Kahan x_total, s_total, z_total;
  for (std::int64_t s = 0; s < shards; ++s) {
    x_total.merge(xs[s]);
    s_total.merge(ss[s]);
    z_total.merge(zs[s]);
  }
  const double n = static_cast<double>(batch.count);
  return {x_total.sum / n, s_total.sum / n, z_total.sum / n};
}

}  // namespace cograte
