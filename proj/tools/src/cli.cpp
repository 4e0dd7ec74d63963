#include "cli.hpp"

#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "args.hpp"
#include "cograte/channel.hpp"
#include "cograte/parallel.hpp"
#include "commands.hpp"
#include "table.hpp"

namespace cograte::cli {
namespace {

struct OutputOpts {
  std::string output;
  std::string format = "both";
  bool gnuplot = false;
};

void add_output_options(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("-o,--output", out.output,
                  "output CSV path (default <command>.csv; relative paths "
                  "resolve under $COGRATE_OUT_DIR)");
  cmd->add_option("--format", out.format, "csv, json or both (default both)")
      ->check(CLI::IsMember({"csv", "json", "both"}));
  cmd->add_flag("--gnuplot", out.gnuplot, "also write a gnuplot script stub");
}

void add_power_options(CLI::App* cmd, const std::string& name, std::string& db,
                       std::string& linear, const std::string& what) {
  cmd->add_option("--" + name + "-db", db, what + " in dB (value or range)");
  cmd->add_option("--" + name + "-linear", linear, what + " on a linear scale");
}

void emit(const Table& table, const OutputOpts& out) {
  OutputSpec spec;
  spec.path = out.output;
  spec.format = out.format;
  spec.gnuplot = out.gnuplot;
  for (const std::string& file : write_table(table, spec)) {
    std::fprintf(stdout, "wrote %s\n", file.c_str());
  }
}

int dispatch(CLI::App& app, const BoundOpts& bound, const OutputOpts& bound_out,
             const OutageOpts& outage, const OutputOpts& outage_out,
             const SectorOpts& sector, const OutputOpts& sector_out,
             const FeedbackOpts& feedback, const OutputOpts& feedback_out,
             const SimulateOpts& simulate, const OutputOpts& simulate_out,
             const std::string& sweep_config, const std::string& sweep_output) {
  if (app.got_subcommand("bound")) {
    emit(run_bound(bound), bound_out);
  } else if (app.got_subcommand("outage")) {
    emit(run_outage(outage), outage_out);
  } else if (app.got_subcommand("sector")) {
    emit(run_sector(sector), sector_out);
  } else if (app.got_subcommand("feedback")) {
    emit(run_feedback(feedback), feedback_out);
  } else if (app.got_subcommand("simulate")) {
    emit(run_simulate(simulate), simulate_out);
  } else if (app.got_subcommand("sweep")) {
    std::vector<std::string> args = config_to_args(parse_config_file(sweep_config));
    if (!sweep_output.empty()) {
      // The override replaces the preset's own output key.
      for (std::size_t i = 0; i + 1 < args.size();) {
        if (args[i] == "--output" || args[i] == "-o") {
          args.erase(args.begin() + static_cast<std::ptrdiff_t>(i),
                     args.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        } else {
          ++i;
        }
      }
      args.push_back("--output");
      args.push_back(sweep_output);
    }
    return run(args);
  }
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{
      "cograte - rate bounds, outage curves and feedback-overhead analysis "
      "for a link that knows the interfering signal but not its channel"};
  app.require_subcommand(1);

  BoundOpts bound;
  OutputOpts bound_out;
  auto* bound_cmd = app.add_subcommand(
      "bound", "phase-uncertainty upper bound vs the reference rates");
  add_power_options(bound_cmd, "p", bound.p_db, bound.p_linear, "transmit power");
  add_power_options(bound_cmd, "q", bound.q_db, bound.q_linear, "interference power");
  add_power_options(bound_cmd, "n", bound.n_db, bound.n_linear, "noise power");
  bound_cmd->add_option("--gamma", bound.gamma, "fade amplitude (value or range, default 1)");
  bound_cmd->add_option("--sigma2", bound.sigma2,
                        "Rayleigh parameter; adds a pdf column to gamma sweeps");
  bound_cmd->add_option("--threads", bound.threads, "worker threads (0 = auto)");
  add_output_options(bound_cmd, bound_out);

  OutageOpts outage;
  OutputOpts outage_out;
  auto* outage_cmd = app.add_subcommand(
      "outage", "Rayleigh outage lower bound / rate-vs-outage upper bound");
  add_power_options(outage_cmd, "p", outage.p_db, outage.p_linear, "transmit power");
  add_power_options(outage_cmd, "q", outage.q_db, outage.q_linear, "interference power");
  add_power_options(outage_cmd, "n", outage.n_db, outage.n_linear, "noise power");
  outage_cmd->add_option("--sigma2", outage.sigma2, "Rayleigh parameter (value, range or list)")
      ->required();
  outage_cmd->add_option("--rate", outage.rate, "committed rate in bits/symbol");
  outage_cmd->add_option("--p-out", outage.p_out, "target outage probability in [0,1)");
  outage_cmd->add_option("--threads", outage.threads, "worker threads (0 = auto)");
  add_output_options(outage_cmd, outage_out);

  SectorOpts sector;
  OutputOpts sector_out;
  auto* sector_cmd = app.add_subcommand(
      "sector", "sectored dirty-paper rates and the optimal sector count");
  add_power_options(sector_cmd, "p", sector.p_db, sector.p_linear, "transmit power");
  add_power_options(sector_cmd, "q", sector.q_db, sector.q_linear, "interference power");
  sector_cmd->add_option("--k", sector.k, "fixed sector count (value or range)");
  sector_cmd->add_option("--k-max", sector.k_max, "search limit for the optimal k");
  sector_cmd->add_option("--threads", sector.threads, "worker threads (0 = auto)");
  add_output_options(sector_cmd, sector_out);

  FeedbackOpts feedback;
  OutputOpts feedback_out;
  auto* feedback_cmd = app.add_subcommand(
      "feedback", "effective rate after phase-training overhead");
  add_power_options(feedback_cmd, "p", feedback.p_db, feedback.p_linear, "transmit power");
  add_power_options(feedback_cmd, "q", feedback.q_db, feedback.q_linear, "interference power");
  feedback_cmd->add_option("--lcoh", feedback.lcoh, "coherence length in symbols (value or range)")
      ->required();
  feedback_cmd->add_option("--confidence", feedback.confidence,
                           "estimator outage probability budget (default 1e-3)");
  feedback_cmd->add_option("--mode", feedback.mode, "both, contiguous or bursty");
  feedback_cmd->add_option("--d-points", feedback.d_points, "distortion grid size");
  feedback_cmd->add_option("--dphi-points", feedback.dphi_points, "phase grid size");
  feedback_cmd->add_option("--quantizer", feedback.quantizer,
                           "quantizer convention: scaled or backward");
  feedback_cmd->add_option("--threads", feedback.threads, "worker threads (0 = auto)");
  add_output_options(feedback_cmd, feedback_out);

  SimulateOpts simulate;
  OutputOpts simulate_out;
  auto* simulate_cmd =
      app.add_subcommand("simulate", "Monte Carlo cross-checks of the closed forms");
  simulate_cmd->add_option("--what", simulate.what, "llse, phase or outage")->required();
  add_power_options(simulate_cmd, "p", simulate.p_db, simulate.p_linear, "transmit power");
  add_power_options(simulate_cmd, "q", simulate.q_db, simulate.q_linear, "interference power");
  simulate_cmd->add_option("--seed", simulate.seed, "RNG seed (default 20260810)");
  simulate_cmd->add_option("--samples", simulate.samples, "trial count (default 1e6)");
  simulate_cmd->add_option("--alpha", simulate.alpha, "dirty-paper scaling in [0,1]");
  simulate_cmd->add_option("--dphi", simulate.dphi, "phase half-width in radians");
  simulate_cmd->add_option("--phi", simulate.phi, "actual phase (default dphi)");
  simulate_cmd->add_option("--d", simulate.d, "quantizer distortion in (0, q)");
  simulate_cmd->add_option("--tau", simulate.tau, "dead-zone length (0 = from formula)");
  simulate_cmd->add_option("--true-phi", simulate.true_phi, "true phase (default 0)");
  simulate_cmd->add_option("--sigma2", simulate.sigma2, "Rayleigh parameter");
  simulate_cmd->add_option("--rate", simulate.rate, "committed rate");
  simulate_cmd->add_option("--confidence", simulate.confidence,
                           "estimator outage budget (default 1e-3)");
  simulate_cmd->add_option("--quantizer", simulate.quantizer, "scaled or backward");
  simulate_cmd->add_option("--threads", simulate.threads, "worker threads (0 = auto)");
  add_output_options(simulate_cmd, simulate_out);

  std::string sweep_config;
  std::string sweep_output;
  auto* sweep_cmd = app.add_subcommand("sweep", "run a preset from a config file");
  sweep_cmd->add_option("--config", sweep_config, "key = value config file")->required();
  sweep_cmd->add_option("-o,--output", sweep_output, "override the preset's output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    return dispatch(app, bound, bound_out, outage, outage_out, sector, sector_out,
                    feedback, feedback_out, simulate, simulate_out, sweep_config,
                    sweep_output);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("cograte");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace cograte::cli
