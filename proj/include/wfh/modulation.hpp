#pragma once

// Input priors over coherent amplitudes and the quadrature rules that average
// conditional quantities over them.

#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace wfh {

enum class ModulationKind { GaussianUni, GaussianBi, GammaUni, BpskUni };

std::string_view to_string(ModulationKind kind);

/// Gamma shape value standing for the BPSK limit nu -> infinity.
inline constexpr double kBpskShape = std::numeric_limits<double>::infinity();

inline bool is_bpsk_shape(double nu) { return nu == kBpskShape; }

class ModulationScheme {
 public:
  /// Real amplitude x ~ N(0, n_S).
  static ModulationScheme gaussian_uni(double n_S);
  /// alpha = x + iy with x, y ~ N(0, n_S / 2) independently.
  static ModulationScheme gaussian_bi(double n_S);
  /// Energy x^2 ~ Gamma(nu, n_S / nu), sign uniform. Requires nu >= 1/2.
  static ModulationScheme gamma_uni(double nu, double n_S);
  /// Equiprobable amplitudes +-sqrt(n_S).
  static ModulationScheme bpsk(double n_S);
  /// Uni-variate family member for shape nu: 1/2 maps to GaussianUni,
  /// kBpskShape to BpskUni, everything else to GammaUni.
  static ModulationScheme from_shape(double nu, double n_S);

  ModulationKind kind() const noexcept { return kind_; }
  double n_S() const noexcept { return n_S_; }
  /// Gamma shape: 1/2 for GaussianUni, kBpskShape for BPSK, NaN for GaussianBi.
  double nu() const noexcept { return nu_; }
  bool bivariate() const noexcept { return kind_ == ModulationKind::GaussianBi; }
  /// Per-quadrature variance of the Gaussian kinds.
  double quadrature_variance() const;

 private:
  ModulationScheme(ModulationKind kind, double n_S, double nu);

  ModulationKind kind_;
  double n_S_;
  double nu_;
};

/// N_{sigma2}(x) = exp(-x^2 / (2 sigma2)) / sqrt(2 pi sigma2).
double gaussian_density(double x, double sigma2);

/// Amplitude density of the Gamma energy prior,
/// nu^nu / (Gamma(nu) n_S^nu) |x|^(2nu - 1) exp(-nu x^2 / n_S).
double gamma_amplitude_density(double x, double nu, double n_S);

/// Discrete stand-in for a prior: nodes alpha_i = x_i + i y_i with positive
/// weights summing to one. Uni-variate rules leave y empty.
struct QuadratureRule {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
  /// Set by build_rule when the node set is closed under x -> -x and
  /// y -> -y with equal weights and no node on an axis.
  bool sign_symmetric = false;

  std::size_t size() const noexcept { return w.size(); }
  bool bivariate() const noexcept { return !y.empty(); }
};

inline constexpr int kPointsPerPanel = 8;
/// Amplitude span beyond which a prior counts as "wide" and keeps a fixed
/// node density instead of a fixed node count.
inline constexpr double kWideSpan = 16.0;
/// Gaussian support is cut at this many standard deviations (tail < 3e-19).
inline constexpr double kTailSigmas = 9.0;
/// Gamma support is cut at these lower/upper quantiles.
inline constexpr double kGammaTailMass = 1e-18;

int default_node_count(ModulationKind kind);

/// Composite Gauss-Legendre rule for the prior. `breakpoints` are amplitudes
/// (per axis for the bi-variate kind) where the integrand is not smooth; panel
/// edges are placed on them. BPSK ignores node_count and breakpoints.
QuadratureRule build_rule(const ModulationScheme& scheme, int node_count,
                          std::span<const double> breakpoints = {});

/// Plain Gauss-Hermite rule for N(0, sigma2); exact for polynomial moments.
QuadratureRule gauss_hermite_rule(double sigma2, int n);

}  // namespace wfh
