#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "args.hpp"
#include "cograte/achievable.hpp"
#include "cograte/bounds.hpp"
#include "cograte/channel.hpp"
#include "cograte/feedback.hpp"
#include "cograte/mc.hpp"
#include "cograte/parallel.hpp"
#include "cograte/special.hpp"

namespace cograte::cli {
namespace {

// The swept parameter drives the rows; everything else must be scalar.
const Param* pick_swept(std::initializer_list<const Param*> params) {
  const Param* swept = nullptr;
  for (const Param* p : params) {
    if (!p->swept()) continue;
    if (swept != nullptr) {
      throw std::invalid_argument("only one of --" + swept->label + " and --" +
                                  p->label + " may be a range");
    }
    swept = p;
  }
  return swept;
}

double value_at(const Param& param, std::size_t row) {
  return param.swept() ? param.values[row] : param.values[0];
}

void fill_rows(Table& table, std::size_t n, int threads,
               const std::function<std::vector<double>(std::size_t)>& make_row) {
  table.rows.assign(n, {});
  parallel::for_each_index(
      static_cast<std::int64_t>(n),
      [&](std::int64_t i) { table.rows[static_cast<std::size_t>(i)] = make_row(static_cast<std::size_t>(i)); },
      threads);
}

QuantizerKind parse_quantizer(const std::string& text) {
  if (text == "scaled") return QuantizerKind::kDistortionScaled;
  if (text == "backward") return QuantizerKind::kBackwardTestChannel;
  throw std::invalid_argument("--quantizer must be 'scaled' or 'backward'");
}

}  // namespace

Table run_bound(const BoundOpts& opts) {
  const Param p = resolve_power("p", opts.p_db, opts.p_linear);
  const Param q = resolve_power("q", opts.q_db, opts.q_linear);
  const Param n = resolve_power("n", opts.n_db, opts.n_linear, 1.0);
  const Param gamma = resolve_plain("gamma", opts.gamma, 1.0);
  for (const double g : gamma.values) {
    if (!(g > 0.0)) throw std::invalid_argument("--gamma values must be > 0");
  }
  if (n.swept()) throw std::invalid_argument("--n cannot be a range");
  const Param* swept = pick_swept({&p, &q, &gamma});

  const bool with_pdf = !opts.sigma2.empty() && &gamma == swept;
  FadeModel fade = FadeModel::fixed(1.0);
  if (with_pdf) {
    fade = FadeModel::rayleigh(resolve_plain("sigma2", opts.sigma2).scalar());
  } else if (!opts.sigma2.empty()) {
    throw std::invalid_argument("--sigma2 only applies when --gamma is the swept range");
  }

  Table table;
  table.command = "bound";
  table.columns = {swept ? swept->label : p.label, "upper_bound",
                   "ignore_interference", "no_interference"};
  if (with_pdf) table.columns.push_back("rayleigh_pdf");

  const std::size_t rows = swept ? swept->values.size() : 1;
  fill_rows(table, rows, opts.threads, [&](std::size_t i) {
    const ChannelParams cp(value_at(p, i), value_at(q, i), n.scalar());
    const double g = value_at(gamma, i);
    std::vector<double> row = {swept ? swept->display[i] : p.display[0],
                               upper_bound_fade(cp, g),
                               rate_ignore_interference(cp, g),
                               rate_no_interference(cp)};
    if (with_pdf) row.push_back(fade.pdf(g));
    return row;
  });
  return table;
}

Table run_outage(const OutageOpts& opts) {
  const Param p = resolve_power("p", opts.p_db, opts.p_linear);
  const Param q = resolve_power("q", opts.q_db, opts.q_linear);
  const Param n = resolve_power("n", opts.n_db, opts.n_linear, 1.0);
  if (p.swept() || q.swept() || n.swept()) {
    throw std::invalid_argument("outage: --p, --q, --n must be scalars");
  }
  const ChannelParams cp(p.scalar(), q.scalar(), n.scalar());
  const Param sigma2 = resolve_plain("sigma2", opts.sigma2);
  for (const double s2 : sigma2.values) {
    if (!(s2 > 0.0)) throw std::invalid_argument("--sigma2 values must be > 0");
  }
  if (opts.rate.empty() == opts.p_out.empty()) {
    throw std::invalid_argument("outage: supply exactly one of --rate and --p-out");
  }

  Table table;
  table.command = "outage";

  if (!opts.rate.empty()) {
    // Committed-rate mode: lower bound on the outage probability.
    const Param rate = resolve_plain("rate", opts.rate);
    for (const double r : rate.values) {
      if (!(r >= 0.0)) throw std::invalid_argument("--rate values must be >= 0");
    }
    const Param* swept = pick_swept({&rate, &sigma2});
    table.columns = {swept ? swept->label : rate.label, "outage_lower_bound",
                     "gamma_lo", "gamma_hi"};
    const std::size_t rows = swept ? swept->values.size() : 1;
    fill_rows(table, rows, opts.threads, [&](std::size_t i) {
      const FadeModel fade = FadeModel::rayleigh(value_at(sigma2, i));
      const OutageInterval iv = outage_interval(cp, fade, value_at(rate, i));
      return std::vector<double>{swept ? swept->display[i] : rate.display[0],
                                 iv.probability, iv.gamma_lo, iv.gamma_hi};
    });
    return table;
  }

  // Target-outage mode: the rate-vs-outage upper bound.
  const Param p_out = resolve_plain("p_out", opts.p_out);
  for (const double po : p_out.values) {
    if (!(po >= 0.0) || !(po < 1.0)) {
      throw std::invalid_argument("--p-out values must lie in [0, 1)");
    }
  }
  if (p_out.swept() && sigma2.swept()) {
    // One curve per Rayleigh parameter, swept over p_out.
    table.columns = {"p_out"};
    for (const double s2 : sigma2.values) {
      table.columns.push_back("upper_bound_s" + format_number(s2));
    }
    fill_rows(table, p_out.values.size(), opts.threads, [&](std::size_t i) {
      std::vector<double> row = {p_out.display[i]};
      for (const double s2 : sigma2.values) {
        row.push_back(rate_vs_outage(cp, FadeModel::rayleigh(s2), p_out.values[i]));
      }
      return row;
    });
    return table;
  }
  const Param* swept = pick_swept({&p_out, &sigma2});
  table.columns = {swept ? swept->label : p_out.label, "upper_bound"};
  const std::size_t rows = swept ? swept->values.size() : 1;
  fill_rows(table, rows, opts.threads, [&](std::size_t i) {
    const FadeModel fade = FadeModel::rayleigh(value_at(sigma2, i));
    return std::vector<double>{swept ? swept->display[i] : p_out.display[0],
                               rate_vs_outage(cp, fade, value_at(p_out, i))};
  });
  return table;
}

Table run_sector(const SectorOpts& opts) {
  const Param p = resolve_power("p", opts.p_db, opts.p_linear);
  const Param q = resolve_power("q", opts.q_db, opts.q_linear);
  if (q.swept()) throw std::invalid_argument("sector: --q must be a scalar");
  if (opts.k_max < 1) throw std::invalid_argument("--k-max must be >= 1");

  Table table;
  table.command = "sector";

  if (!opts.k.empty()) {
    // Fixed-k curve at a single operating point.
    if (p.swept()) {
      throw std::invalid_argument("sector: --p must be a scalar when --k is given");
    }
    const Param k = resolve_plain("k", opts.k);
    const ChannelParams cp(p.scalar(), q.scalar(), 1.0);
    table.columns = {"k", "sectoring", "low_sir_approx"};
    fill_rows(table, k.values.size(), opts.threads, [&](std::size_t i) {
      const double kv = k.values[i];
      const int ki = static_cast<int>(std::llround(kv));
      if (ki < 1 || std::abs(kv - ki) > 1e-9) {
        throw std::invalid_argument("--k values must be positive integers");
      }
      return std::vector<double>{static_cast<double>(ki),
                                 sectoring_rate(cp, ki).rate,
                                 low_sir_approx(cp, ki)};
    });
    return table;
  }

  table.columns = {p.label,  "sectoring",      "ignore_interference",
                   "k_opt",  "low_sir_approx", "beats_ignore"};
  const std::size_t rows = p.values.size();
  fill_rows(table, rows, opts.threads, [&](std::size_t i) {
    const ChannelParams cp(p.values[i], q.scalar(), 1.0);
    const SectorPlan plan = optimize_sectors(cp, opts.k_max);
    return std::vector<double>{p.display[i],
                               plan.rate,
                               rate_ignore_interference(cp, 1.0),
                               static_cast<double>(plan.k),
                               low_sir_approx(cp, plan.k),
                               plan.beats_ignore ? 1.0 : 0.0};
  });
  return table;
}

Table run_feedback(const FeedbackOpts& opts) {
  const Param p = resolve_power("p", opts.p_db, opts.p_linear);
  const Param q = resolve_power("q", opts.q_db, opts.q_linear);
  const Param lcoh = resolve_plain("lcoh", opts.lcoh);
  if (p.swept()) throw std::invalid_argument("feedback: --p must be a scalar");
  if (opts.mode != "both" && opts.mode != "contiguous" && opts.mode != "bursty") {
    throw std::invalid_argument("--mode must be both, contiguous or bursty");
  }
  if (opts.d_points < 2 || opts.dphi_points < 2) {
    throw std::invalid_argument("--d-points and --dphi-points must be >= 2");
  }
  const QuantizerKind quantizer = parse_quantizer(opts.quantizer);
  const Param* swept = pick_swept({&q, &lcoh});

  const bool contiguous = opts.mode != "bursty";
  const bool bursty = opts.mode != "contiguous";

  Table table;
  table.command = "feedback";
  table.columns = {swept ? swept->label : lcoh.label};
  if (contiguous) {
    for (const char* c : {"r_eff_contiguous", "c_tau", "c_d", "c_dphi", "c_alpha", "c_fallback"})
      table.columns.push_back(c);
  }
  if (bursty) {
    for (const char* c : {"r_eff_bursty", "b_tau_pk", "b_tau_dead", "b_d", "b_dphi", "b_feasible"})
      table.columns.push_back(c);
  }

  const std::size_t rows = swept ? swept->values.size() : 1;
  fill_rows(table, rows, opts.threads, [&](std::size_t i) {
    // Coherence lengths round to whole symbols so geometric sweeps just work.
    const auto l = static_cast<std::int64_t>(std::llround(value_at(lcoh, i)));
    if (l < 1) throw std::invalid_argument("--lcoh values must be >= 1");
    const ChannelParams cp(p.scalar(), value_at(q, i), 1.0);
    FeedbackPlan plan = FeedbackPlan::with_default_grids(cp, l);
    plan.confidence = opts.confidence;
    plan.quantizer = quantizer;
    if (opts.d_points != 40 || opts.dphi_points != 40) {
      FeedbackPlan wide = plan;
      wide.d_grid.clear();
      wide.dphi_grid.clear();
      const double d_lo = 0.01 * cp.q, d_hi = 0.99 * cp.q;
      for (int j = 0; j < opts.d_points; ++j) {
        wide.d_grid.push_back(d_lo * std::pow(d_hi / d_lo, static_cast<double>(j) / (opts.d_points - 1)));
      }
      const double f_lo = 1e-3, f_hi = std::numbers::pi / 2.0;
      for (int j = 0; j < opts.dphi_points; ++j) {
        wide.dphi_grid.push_back(f_lo * std::pow(f_hi / f_lo, static_cast<double>(j) / (opts.dphi_points - 1)));
      }
      plan = wide;
    }

    std::vector<double> row = {swept == &lcoh ? static_cast<double>(l)
                               : swept        ? swept->display[i]
                                              : static_cast<double>(l)};
    if (contiguous) {
      plan.mode = FeedbackMode::kContiguous;
      const RateReport r = effective_rate_contiguous(cp, plan);
      row.insert(row.end(),
                 {r.rate, r.params.at("tau"), r.params.at("d"), r.params.at("dphi"),
                  r.params.at("alpha"), r.params.at("used_fallback")});
    }
    if (bursty) {
      plan.mode = FeedbackMode::kBursty;
      const RateReport r = effective_rate_bursty(cp, plan);
      row.insert(row.end(),
                 {r.rate, r.params.at("tau_pk"), r.params.at("tau_dead"),
                  r.params.at("d"), r.params.at("dphi"), r.params.at("feasible")});
    }
    return row;
  });
  return table;
}

Table run_simulate(const SimulateOpts& opts) {
  const Param p = resolve_power("p", opts.p_db, opts.p_linear);
  const Param q = resolve_power("q", opts.q_db, opts.q_linear);
  if (p.swept() || q.swept()) {
    throw std::invalid_argument("simulate: parameters must be scalars");
  }
  if (opts.samples < 1) throw std::invalid_argument("--samples must be >= 1");
  parallel::set_default_threads(opts.threads);
  const ChannelParams cp(p.scalar(), q.scalar(), 1.0);
  const SampleBatch batch{opts.seed, opts.samples};

  Table table;
  table.command = "simulate";

  if (opts.what == "llse") {
    const double alpha = resolve_plain("alpha", opts.alpha).scalar();
    const double dphi = resolve_plain("dphi", opts.dphi).scalar();
    const double phi = opts.phi.empty() ? dphi : resolve_plain("phi", opts.phi).scalar();
    const double analytic = llse_error(cp, alpha, dphi, phi);
    const MomentEstimate mc = mc_llse_error(cp, alpha, dphi, phi, batch);
    table.columns = {"samples", "analytic", "mc_mean", "mc_std_error", "z_score"};
    table.rows = {{static_cast<double>(opts.samples), analytic, mc.mean, mc.std_error,
                   (mc.mean - analytic) / mc.std_error}};
    return table;
  }

  if (opts.what == "phase") {
    const double d = resolve_plain("d", opts.d).scalar();
    const double dphi = resolve_plain("dphi", opts.dphi).scalar();
    const double true_phi = opts.true_phi.empty() ? 0.0 : resolve_plain("true-phi", opts.true_phi).scalar();
    const QuantizerModel qm(cp, d, parse_quantizer(opts.quantizer));
    std::int64_t tau = opts.tau.empty()
                           ? 0
                           : static_cast<std::int64_t>(std::llround(resolve_plain("tau", opts.tau).scalar()));
    if (tau <= 0) tau = training_time(cp, qm, dphi, opts.confidence);
    if (tau < 1) throw std::invalid_argument("resolved tau must be >= 1");
    const PhaseEstimatorStats st = mc_phase_estimator(cp, qm, tau, true_phi, dphi, batch);
    table.columns = {"samples",  "tau",           "predicted_tail", "tail_linear",
                     "tail_linear_abs", "tail_exact", "tail_exact_abs",
                     "std_linear", "std_exact"};
    table.rows = {{static_cast<double>(opts.samples), static_cast<double>(tau),
                   opts.confidence, st.linearized.tail_one_sided,
                   st.linearized.tail_two_sided, st.exact.tail_one_sided,
                   st.exact.tail_two_sided, st.linearized.stddev, st.exact.stddev}};
    return table;
  }

  if (opts.what == "outage") {
    const double s2 = resolve_plain("sigma2", opts.sigma2).scalar();
    const double rate = resolve_plain("rate", opts.rate).scalar();
    const FadeModel fade = FadeModel::rayleigh(s2);
    const double analytic = outage_lower_bound(cp, fade, rate);
    const MomentEstimate mc = mc_outage(cp, fade, rate, batch);
    table.columns = {"samples", "analytic", "mc_mean", "mc_std_error", "z_score"};
    const double se = mc.std_error > 0.0 ? mc.std_error : 1.0;
    table.rows = {{static_cast<double>(opts.samples), analytic, mc.mean, mc.std_error,
                   (mc.mean - analytic) / se}};
    return table;
  }

  throw std::invalid_argument("--what must be llse, phase or outage");
}

}  // namespace cograte::cli
