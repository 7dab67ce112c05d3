#pragma once

// Maximization of the information rate over the LO energy z^2, and jointly
// over (z, nu) for the Gamma modulation family.

#include <functional>
#include <vector>

#include "wfh/detectors.hpp"
#include "wfh/modulation.hpp"

namespace wfh {

/// {1/2} followed by 25 log-spaced shapes in [0.6, 1e3] and the BPSK marker.
std::vector<double> default_nu_grid();

struct OptimizerSettings {
  double z2_min = 1e-6;
  double z2_max = 1e2;
  int coarse_points = 25;
  /// Relative tolerance on z^2 for the golden-section refinement.
  double refine_tol = 1e-3;
  /// Number of best coarse points refined independently.
  int starts = 3;
  std::vector<double> nu_grid = default_nu_grid();
  /// The first grid shape is reported when its rate is within this many bits
  /// of the best; otherwise the best shape wins.
  double nu_tie_tol_bits = 1e-6;

  void validate() const;
};

struct ZProbe {
  double z;
  double bits;
};

struct ZOptimum {
  double z_opt = 0.0;
  double bits = 0.0;
  double coarse_best = 0.0;
  /// Result of each refinement start, best coarse point first.
  std::vector<ZProbe> starts;
};

using ZObjective = std::function<double(double z)>;

/// Coarse log-grid scan over z^2 then golden-section refinement in log z^2
/// from the best `starts` coarse points. Throws NumericError at a non-finite
/// probe.
ZOptimum optimize_z(const ZObjective& objective, const OptimizerSettings& settings = {});

/// optimize_z for a detector kind at theta = 0 with the rule rebuilt for each z.
ZOptimum optimize_z(DetectorKind kind, PnrResolution M, const ModulationScheme& scheme,
                    int node_count = 0, const OptimizerSettings& settings = {});

struct NuResult {
  double nu;
  ZOptimum opt;
};

struct ZNuOptimum {
  double z_opt = 0.0;
  double nu_opt = 0.5;
  double bits = 0.0;
  std::vector<NuResult> per_nu;
};

/// WH with the uni-variate Gamma family, nu = 1/2 evaluated as Gaussian and
/// the BPSK marker as the two-point prior.
ZNuOptimum optimize_z_nu(PnrResolution M, double n_S, const OptimizerSettings& settings = {},
                         int node_count = 0);

}  // namespace wfh
