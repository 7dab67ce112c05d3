#pragma once

// Closed-form capacity curves in bits per channel use, as functions of the
// mean received energy n_S.

#include <functional>

namespace wfh {

inline constexpr double kEulerGamma = 0.57721566490153286;
/// Smallest n_S accepted by dd_upper_bound.
inline constexpr double kDdMinEnergy = 1e-12;

/// Single homodyne with Gaussian modulation: log2(1 + 4 n_S) / 2.
double shannon_sh(double n_S);
/// Double homodyne with Gaussian modulation: log2(1 + n_S).
double shannon_dh(double n_S);
/// g(n_S) = (n_S + 1) log2(n_S + 1) - n_S log2 n_S.
double holevo(double n_S);
/// Upper bound on the direct-detection (discrete-time Poisson) capacity.
double dd_upper_bound(double n_S);

class ChannelParams {
 public:
  /// Lossy channel of transmissivity tau in (0, 1] fed with n_bar photons/use.
  ChannelParams(double tau, double n_bar);

  double tau() const noexcept { return tau_; }
  double n_bar() const noexcept { return n_bar_; }
  double n_S() const noexcept { return tau_ * n_bar_; }

 private:
  double tau_;
  double n_bar_;
};

using Curve = std::function<double(double)>;

/// Root of f - g on [lo, hi] by bisection to `tol` absolute.
/// Throws BracketError when f - g has no sign change on the bracket.
double find_crossover(const Curve& f, const Curve& g, double lo, double hi, double tol = 1e-4);

}  // namespace wfh
