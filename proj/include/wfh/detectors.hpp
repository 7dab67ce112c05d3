#pragma once

// Weak-field receivers built from a balanced beam splitter, a local
// oscillator |z e^{i theta}> and two PNR(M) detectors.
//
//   WH  joint click counts (n1, n2)
//   HL  click difference n1 - n2 only
//   DW  signal split in two, WH on theta = 0 and theta = pi/2 with the same z
//
// Amplitudes are in shot-noise units: a coherent state |alpha> carries
// |alpha|^2 mean photons.

#include <complex>
#include <span>
#include <string_view>
#include <vector>

#include "wfh/pnr_statistics.hpp"

namespace wfh {

class CoherentAmplitude {
 public:
  CoherentAmplitude(double re = 0.0, double im = 0.0);
  CoherentAmplitude(std::complex<double> a) : CoherentAmplitude(a.real(), a.imag()) {}

  double re() const noexcept { return re_; }
  double im() const noexcept { return im_; }
  std::complex<double> value() const noexcept { return {re_, im_}; }
  double energy() const noexcept { return re_ * re_ + im_ * im_; }

 private:
  double re_;
  double im_;
};

class DetectorConfig {
 public:
  /// theta must lie in [0, pi); z is the LO amplitude (LO energy z^2).
  DetectorConfig(PnrResolution M, double z, double theta = 0.0);

  PnrResolution resolution() const noexcept { return M_; }
  int M() const noexcept { return M_.value(); }
  double z() const noexcept { return z_; }
  double theta() const noexcept { return theta_; }

 private:
  PnrResolution M_;
  double z_;
  double theta_;
};

enum class DetectorKind { WH, HL, DW };

std::string_view to_string(DetectorKind kind);
DetectorKind parse_detector_kind(std::string_view s);

struct BranchEnergies {
  double plus;
  double minus;
};

/// mu_pm = |alpha +- z e^{i theta}|^2 / 2.
BranchEnergies branch_energies(CoherentAmplitude alpha, const DetectorConfig& cfg);

class WhOutcomeDistribution {
 public:
  WhOutcomeDistribution(int M, std::vector<double> probs);

  int M() const noexcept { return M_; }
  double operator()(int n1, int n2) const { return probs_[index(n1, n2)]; }
  std::span<const double> flat() const noexcept { return probs_; }

  static std::size_t index(int n1, int n2, int M) { return std::size_t(n1) * (M + 1) + n2; }

 private:
  std::size_t index(int n1, int n2) const;

  int M_;
  std::vector<double> probs_;
};

class HlOutcomeDistribution {
 public:
  HlOutcomeDistribution(int M, std::vector<double> probs);

  int M() const noexcept { return M_; }
  /// Probability of the click difference delta in -M..M.
  double at(int delta) const;
  std::span<const double> flat() const noexcept { return probs_; }

 private:
  int M_;
  std::vector<double> probs_;
};

class DwOutcomeDistribution {
 public:
  DwOutcomeDistribution(int M, std::vector<double> probs);

  int M() const noexcept { return M_; }
  double operator()(int n1, int n2, int m1, int m2) const;
  std::span<const double> flat() const noexcept { return probs_; }

 private:
  int M_;
  std::vector<double> probs_;
};

WhOutcomeDistribution wh_distribution(CoherentAmplitude alpha, const DetectorConfig& cfg);

/// Kronecker-delta contraction of a WH distribution onto the click difference.
HlOutcomeDistribution hl_from_wh(const WhOutcomeDistribution& wh);

HlOutcomeDistribution hl_distribution(CoherentAmplitude alpha, const DetectorConfig& cfg);

/// The two DW arms see alpha / sqrt(2) each, measured at theta = 0 and pi/2.
DwOutcomeDistribution dw_distribution(CoherentAmplitude alpha, PnrResolution M, double z);

/// DetectorConfig of DW arm 0 (theta = 0) or arm 1 (theta = pi/2).
DetectorConfig dw_arm_config(PnrResolution M, double z, int arm);

/// Empirical moment sum_delta delta^order S(delta) of the HL distribution.
double hl_difference_moment(const DetectorConfig& cfg, CoherentAmplitude alpha, int order);

}  // namespace wfh
