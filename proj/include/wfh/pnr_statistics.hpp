#pragma once

// Click statistics of a photon-number-resolving detector with finite
// resolution M: outcomes 0..M-1 are exact photon counts, outcome M collects
// every event with M or more photons.

#include <limits>
#include <span>
#include <vector>

namespace wfh {

class PnrResolution {
 public:
  explicit PnrResolution(int max_count);

  int value() const noexcept { return max_count_; }
  int outcomes() const noexcept { return max_count_ + 1; }

  friend bool operator==(PnrResolution, PnrResolution) = default;

 private:
  int max_count_;
};

struct ClickProbabilities {
  std::vector<double> probs;  // indexed n = 0..M
  double mean_energy = 0.0;
};

/// Sentinel returned by log2_truncated_poisson for outcomes of probability zero.
inline constexpr double kLogZero = -std::numeric_limits<double>::infinity();

/// Size of the cached log-factorial table; larger arguments fall back to lgamma.
inline constexpr int kLogFactorialCap = 512;

double log_factorial(int n);

/// Truncated Poisson law q_n(mu): Poisson masses for n < M and the
/// saturation mass 1 - sum_{j<M} q_j at n = M.
ClickProbabilities truncated_poisson(double mu, PnrResolution M);

/// Allocation-free form of truncated_poisson. `out` must hold M+1 entries.
void truncated_poisson_into(double mu, int M, std::span<double> out);

/// log2 q_n(mu), or kLogZero when the probability is exactly zero.
double log2_truncated_poisson(double mu, PnrResolution M, int n);

/// Shannon entropy (bits) of the truncated Poisson law, with log-probabilities
/// taken in log space so that underflowing masses do not bias the sum.
double truncated_poisson_entropy(double mu, int M);

}  // namespace wfh
