#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdhd/edp.hpp"
#include "bdhd/instance.hpp"
#include "bdhd/plan.hpp"

namespace bdhd {

struct AlgoResult {
  InterceptionPlan plan;
  SolveStatus status = SolveStatus::Optimal;
};

// algo is one of dp | edp | bnb | oracle (oracle yields a count-only plan).
// Unknown names throw std::invalid_argument.
AlgoResult run_algo(const Instance& inst, const std::string& algo,
                    double time_limit_s = 60.0, const EdpOptions& edp = {});

// One measurement. Cell-coordinate fields are print-ready strings; empty
// means not applicable to the preset. wall_ms never enters the primary CSV
// so reruns stay byte-identical.
struct ExperimentRow {
  std::string preset;
  std::string topology;
  std::string size;
  std::string k;
  std::string lambda;
  std::string events;
  std::string vmin;
  std::string vmax;
  std::string vsum;
  std::string ratio;
  std::string horizon;
  std::uint64_t seed = 0;
  std::string algo;
  std::string status = "ok";
  int count = 0;
  int n = 0;
  double rate = 0.0;
  double wall_ms = 0.0;
};

struct ExperimentConfig {
  std::string preset;      // scaling | defenders | heterogeneity |
                           // lambda-grid | topology | horizon
  int runs = 0;            // seeds per cell; 0 = preset default
  std::uint64_t seed = 1;  // base seed; per-run instance seeds derive from it
  double time_limit_s = 60.0;
  int jobs = 1;
  EdpOptions edp;
};

const std::vector<std::string>& experiment_preset_names();

// Full grid sweep; row order is cell-major then seed then algo, independent
// of the job count. Per-row failures are recorded in status.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig& cfg);

std::string experiment_csv(const std::vector<ExperimentRow>& rows);
std::string experiment_timing_csv(const std::vector<ExperimentRow>& rows);

// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace bdhd
