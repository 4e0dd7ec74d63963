#pragma once

#include <cstdint>
#include <string>

#include "table.hpp"

namespace cograte::cli {

// Raw option values as collected from the command line; numeric fields stay
// strings until the handlers resolve them so range syntax and the dB/linear
// flag pairs validate in one place.

struct BoundOpts {
  std::string p_db, p_linear;
  std::string q_db, q_linear;
  std::string n_db, n_linear;
  std::string gamma;
  std::string sigma2;
  int threads = 0;
};

struct OutageOpts {
  std::string p_db, p_linear;
  std::string q_db, q_linear;
  std::string n_db, n_linear;
  std::string sigma2;
  std::string rate;
  std::string p_out;
  int threads = 0;
};

struct SectorOpts {
  std::string p_db, p_linear;
  std::string q_db, q_linear;
  std::string k;
  int k_max = 512;
  int threads = 0;
};

struct FeedbackOpts {
  std::string p_db, p_linear;
  std::string q_db, q_linear;
  std::string lcoh;
  double confidence = 1e-3;
  std::string mode = "both";       // both | contiguous | bursty
  int d_points = 40;
  int dphi_points = 40;
  std::string quantizer = "scaled";  // scaled | backward
  int threads = 0;
};

struct SimulateOpts {
  std::string what;  // llse | phase | outage
  std::string p_db, p_linear;
  std::string q_db, q_linear;
  std::uint64_t seed = 20260810;
  std::int64_t samples = 1'000'000;
  std::string alpha;
  std::string dphi;
  std::string phi;
  std::string d;
  std::string tau;
  std::string true_phi;
  std::string sigma2;
  std::string rate;
  double confidence = 1e-3;
  std::string quantizer = "scaled";
  int threads = 0;
};

Table run_bound(const BoundOpts& opts);
Table run_outage(const OutageOpts& opts);
Table run_sector(const SectorOpts& opts);
Table run_feedback(const FeedbackOpts& opts);
Table run_simulate(const SimulateOpts& opts);

}  // namespace cograte::cli
