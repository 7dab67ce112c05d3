#pragma once

// Mutual information between a coherent-state prior and a weak-field
// measurement record, plus the derived figures of merit.

#include <span>
#include <vector>

#include "wfh/detectors.hpp"
#include "wfh/modulation.hpp"

namespace wfh {

/// -sum p log2 p with 0 log 0 = 0. Entries must be non-negative and sum to 1
/// within 1e-6; the vector is renormalized before use.
double shannon_entropy(std::span<const double> p);

/// A receiver: kind plus its PNR resolution, LO amplitude and phase. DW
/// ignores theta (its arms are fixed at 0 and pi/2).
struct Detector {
  DetectorKind kind;
  DetectorConfig cfg;
};

/// Amplitudes (per axis for DW) at which a branch energy vanishes; the
/// conditional entropy is not smooth there.
std::vector<double> detector_kinks(const Detector& det);

/// I = H[p_B] - sum_i w_i H[p_B|A(. | alpha_i)] with p_B = sum_i w_i p_B|A(. | alpha_i).
/// WH and HL need a uni-variate scheme and rule, DW a bi-variate one.
double mutual_information(const Detector& det, const ModulationScheme& scheme,
                          const QuadratureRule& rule);

/// Same, with the rule built for `scheme` at `node_count` (0 = default) and
/// panel edges on the detector kinks.
double mutual_information(const Detector& det, const ModulationScheme& scheme,
                          int node_count = 0);

/// Photon information efficiency in bits per received photon.
double pie(double bits_per_use, double n_S);

enum class Baseline { SH, DH, DD };

struct RatioGain {
  double ratio;  // I / C_baseline
  double gain;   // I / C_baseline - 1
};

RatioGain ratio_and_gain(double bits_per_use, double n_S, Baseline baseline);

/// Shannon baseline of matching arity: SH for WH/HL, DH for DW.
Baseline shannon_baseline(DetectorKind kind);

struct RateResult {
  double bits_per_use = 0.0;
  double pie_bits_per_photon = 0.0;
  double z_opt = 0.0;
  /// Gamma shape at the optimum; kBpskShape for BPSK, NaN when not optimized.
  double nu_opt = std::numeric_limits<double>::quiet_NaN();
  ModulationScheme scheme;
  DetectorKind detector;
  int M;
};

}  // namespace wfh
