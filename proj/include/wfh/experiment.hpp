#pragma once

// Sweep driver: one row per (n_S, M, detector, modulation) cell.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wfh/sweep_config.hpp"

namespace wfh {

/// One result line. Baseline rows carry the capacity name (SH, DH, Holevo,
/// DD) in `detector` and M = 0. `ratio` is relative to the Shannon capacity
/// of matching arity (C_SH for baselines, WH, HL; C_DH for DW), `gain` is
/// I / C_DD - 1.
struct ResultRow {
  std::string experiment;
  double n_S = 0.0;
  int M = 0;
  std::string detector;
  std::string modulation;
  double bits_per_use = 0.0;
  double pie = 0.0;
  double ratio = 0.0;
  double gain = 0.0;
  double z_opt = 0.0;
  /// Gamma shape at the optimum (ngm only); infinity stands for BPSK.
  std::optional<double> nu_opt;
  int node_count = 0;
  double wall_time_s = 0.0;
};

/// Optional per-cell progress callback (cells done, cells total).
using ProgressFn = std::function<void(std::size_t, std::size_t)>;

/// Runs every cell of the sweep. Results are sorted by
/// (experiment, n_S, M, detector, modulation). A failing cell aborts the run
/// with an error naming its coordinates.
std::vector<ResultRow> run_experiment(const SweepConfig& config, const ProgressFn& progress = {});

}  // namespace wfh
