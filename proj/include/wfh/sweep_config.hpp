#pragma once

// Sweep configuration: flat key = value text with [section] headers.
//
//   [sweep]       experiment, threads, output
//   [grid]        n_S_min, n_S_max, points, extra (comma list)
//   [detectors]   M (comma list)
//   [quadrature]  nodes_uni, nodes_bi, nodes_gamma (0 = default)
//   [optimizer]   z2_min, z2_max, coarse_points, refine_tol, starts,
//                 nu_grid (comma list, "inf" = BPSK, "default"), nu_tie_tol
//
// '#' starts a comment. Unknown sections or keys are configuration errors.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "wfh/lo_optimizer.hpp"

namespace wfh {

enum class ExperimentKind { Baselines, SingleQuadrature, PhotonStarved, DoubleQuadrature, Gains, Ngm };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view s);

/// Log-spaced grid from min to max inclusive.
struct GridSpec {
  double min = 1e-5;
  double max = 10.0;
  int points = 41;

  std::vector<double> values() const;
  void validate() const;
};

struct SweepConfig {
  ExperimentKind experiment = ExperimentKind::Baselines;
  GridSpec n_S_grid;
  /// Extra n_S points evaluated in addition to the grid.
  std::vector<double> extra_n_S;
  std::vector<int> M_list{1, 3, 5, 10};
  int nodes_uni = 0;
  int nodes_bi = 0;
  int nodes_gamma = 0;
  OptimizerSettings optimizer;
  std::string output_path;
  int threads = 1;

  /// Grid and resolution defaults of each experiment.
  static SweepConfig defaults(ExperimentKind kind);

  /// Sorted, de-duplicated union of the grid and the extra points.
  std::vector<double> n_S_values() const;
  void validate() const;
};

SweepConfig parse_sweep_config(std::istream& in);
SweepConfig load_sweep_config(const std::string& path);

}  // namespace wfh
