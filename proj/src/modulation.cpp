#include "wfh/modulation.hpp"

#include <algorithm>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "wfh/errors.hpp"
#include "wfh/quadrature.hpp"

namespace wfh {

namespace {

void check_energy(double n_S) {
  if (!std::isfinite(n_S) || n_S < 0.0)
    throw DomainError("mean received energy must be finite and non-negative, got " +
                      std::to_string(n_S));
}

QuadratureRule point_mass(bool bivariate) {
  QuadratureRule r;
  r.x = {0.0};
  if (bivariate) r.y = {0.0};
  r.w = {1.0};
  return r;
}

// Equal panels of width <= h over [a, b], split further at breakpoints.
std::vector<double> panel_edges(double a, double b, double h, std::span<const double> breaks) {
  const int panels = std::max(1, int(std::ceil((b - a) / h - 1e-9)));
  std::vector<double> edges(panels + 1);
  for (int k = 0; k <= panels; ++k) edges[k] = a + (b - a) * k / panels;
  edges.back() = b;
  const double snap = 1e-12 * (b - a);
  for (double bp : breaks) {
    if (!(bp > a + snap && bp < b - snap)) continue;
    const auto it = std::lower_bound(edges.begin(), edges.end(), bp);
    if (std::abs(*it - bp) <= snap || std::abs(*(it - 1) - bp) <= snap) continue;
    edges.insert(it, bp);
  }
  return edges;
}

void normalize(std::vector<double>& w) {
  double s = 0.0;
  for (double v : w) s += v;
  if (!(s > 0.0) || !std::isfinite(s)) throw NumericError("quadrature weights do not normalize");
  for (double& v : w) v /= s;
}

void check_node_count(int node_count) {
  if (node_count < kPointsPerPanel)
    throw ConfigError("quadrature node count must be at least " +
                      std::to_string(kPointsPerPanel) + ", got " + std::to_string(node_count));
}

// Gaussian N(0, sigma2) on the real line. Panels are laid out on the
// positive half and mirrored, so nodes come in exact +-x pairs.
void gaussian_axis(double sigma2, int node_count, std::span<const double> breaks,
                   std::vector<double>& x, std::vector<double>& w) {
  const double sigma = std::sqrt(sigma2);
  const double half = kTailSigmas * sigma;
  const double h = kPointsPerPanel * std::min(2.0 * half, kWideSpan) / node_count;
  std::vector<double> abs_breaks;
  for (double b : breaks) abs_breaks.push_back(std::abs(b));
  std::sort(abs_breaks.begin(), abs_breaks.end());
  const auto edges = panel_edges(0.0, half, h, abs_breaks);
  const auto& gl = gauss::legendre(kPointsPerPanel);
  std::vector<double> hx, hw;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double c = 0.5 * (edges[p] + edges[p + 1]);
    const double r = 0.5 * (edges[p + 1] - edges[p]);
    for (int k = 0; k < kPointsPerPanel; ++k) {
      const double xi = c + r * gl.nodes[k];
      hx.push_back(xi);
      hw.push_back(r * gl.weights[k] * std::exp(-xi * xi / (2.0 * sigma2)));
    }
  }
  normalize(hw);
  x.clear();
  w.clear();
  for (std::size_t k = hx.size(); k-- > 0;) {
    x.push_back(-hx[k]);
    w.push_back(0.5 * hw[k]);
  }
  for (std::size_t k = 0; k < hx.size(); ++k) {
    x.push_back(hx[k]);
    w.push_back(0.5 * hw[k]);
  }
}

QuadratureRule gaussian_uni_rule(double n_S, int node_count, std::span<const double> breaks) {
  if (n_S == 0.0) return point_mass(false);
  QuadratureRule r;
  gaussian_axis(n_S, node_count, breaks, r.x, r.w);
  return r;
}

QuadratureRule gaussian_bi_rule(double n_S, int node_count, std::span<const double> breaks) {
  if (n_S == 0.0) return point_mass(true);
  std::vector<double> ax, aw;
  gaussian_axis(0.5 * n_S, node_count, breaks, ax, aw);
  QuadratureRule r;
  const std::size_t n = ax.size();
  r.x.reserve(n * n);
  r.y.reserve(n * n);
  r.w.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      r.x.push_back(ax[i]);
      r.y.push_back(ax[j]);
      r.w.push_back(aw[i] * aw[j]);
    }
  r.sign_symmetric = true;
  return r;
}

// Half-line rule for |x| under the Gamma energy prior, mirrored to +-x. The
// integrand seen by the rule is g(|x|) = f(x) + f(-x), smooth in |x| apart
// from |breakpoint| positions; the x^(2 nu - 1) factor at the origin is
// absorbed into a Gauss-Jacobi panel.
QuadratureRule gamma_uni_rule(double nu, double n_S, int node_count,
                              std::span<const double> breaks) {
  if (n_S == 0.0) return point_mass(false);
  namespace bm = boost::math;
  const double scale = n_S / nu;
  const double e_hi = bm::gamma_q_inv(nu, kGammaTailMass) * scale;
  const double e_lo = bm::gamma_p_inv(nu, kGammaTailMass) * scale;
  const double x_hi = std::sqrt(e_hi);
  double x_lo = std::sqrt(e_lo);
  const bool singular_start = x_lo < 1e-3 * x_hi;
  if (singular_start) x_lo = 0.0;

  std::vector<double> abs_breaks;
  for (double b : breaks) abs_breaks.push_back(std::abs(b));
  std::sort(abs_breaks.begin(), abs_breaks.end());

  const double span = x_hi - x_lo;
  const double h = 2.0 * kPointsPerPanel * std::min(span, 0.5 * kWideSpan) / node_count;
  const auto edges = panel_edges(x_lo, x_hi, h, abs_breaks);

  // log of the unnormalized half-line density relative to x_ref = sqrt(n_S).
  const double beta = 2.0 * nu - 1.0;
  const double x_ref = std::sqrt(n_S);
  const auto log_tilt = [&](double x) { return -nu * (x * x - n_S) / n_S; };

  std::vector<double> xs, ws;
  const auto& gl = gauss::legendre(kPointsPerPanel);
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double a = edges[p], b = edges[p + 1];
    if (p == 0 && singular_start) {
      const auto gj = gauss::jacobi(kPointsPerPanel, 0.0, beta);
      const double log_scale = (beta + 1.0) * std::log(0.5 * b) - beta * std::log(x_ref);
      for (int k = 0; k < kPointsPerPanel; ++k) {
        const double xi = 0.5 * b * (1.0 + gj.nodes[k]);
        xs.push_back(xi);
        ws.push_back(gj.weights[k] * std::exp(log_scale + log_tilt(xi)));
      }
      continue;
    }
    const double c = 0.5 * (a + b), r = 0.5 * (b - a);
    for (int k = 0; k < kPointsPerPanel; ++k) {
      const double xi = c + r * gl.nodes[k];
      xs.push_back(xi);
      ws.push_back(r * gl.weights[k] * std::exp(beta * std::log(xi / x_ref) + log_tilt(xi)));
    }
  }
  normalize(ws);

  QuadratureRule rule;
  rule.x.reserve(2 * xs.size());
  rule.w.reserve(2 * xs.size());
  for (std::size_t k = 0; k < xs.size(); ++k) {
    rule.x.push_back(xs[k]);
    rule.w.push_back(0.5 * ws[k]);
    rule.x.push_back(-xs[k]);
    rule.w.push_back(0.5 * ws[k]);
  }
  return rule;
}

}  // namespace

std::string_view to_string(ModulationKind kind) {
  switch (kind) {
    case ModulationKind::GaussianUni: return "gaussian_uni";
    case ModulationKind::GaussianBi: return "gaussian_bi";
    case ModulationKind::GammaUni: return "gamma_uni";
    case ModulationKind::BpskUni: return "bpsk";
  }
  return "?";
}

ModulationScheme::ModulationScheme(ModulationKind kind, double n_S, double nu)
    : kind_(kind), n_S_(n_S), nu_(nu) {
  check_energy(n_S);
}

ModulationScheme ModulationScheme::gaussian_uni(double n_S) {
  return {ModulationKind::GaussianUni, n_S, 0.5};
}

ModulationScheme ModulationScheme::gaussian_bi(double n_S) {
  return {ModulationKind::GaussianBi, n_S, std::numeric_limits<double>::quiet_NaN()};
}

ModulationScheme ModulationScheme::gamma_uni(double nu, double n_S) {
  if (!(nu >= 0.5) || !std::isfinite(nu))
    throw DomainError("Gamma shape must be finite and >= 1/2, got " + std::to_string(nu));
  return {ModulationKind::GammaUni, n_S, nu};
}

ModulationScheme ModulationScheme::bpsk(double n_S) {
  return {ModulationKind::BpskUni, n_S, kBpskShape};
}

ModulationScheme ModulationScheme::from_shape(double nu, double n_S) {
  if (is_bpsk_shape(nu)) return bpsk(n_S);
  if (nu == 0.5) return gaussian_uni(n_S);
  return gamma_uni(nu, n_S);
}

double ModulationScheme::quadrature_variance() const {
  switch (kind_) {
    case ModulationKind::GaussianUni: return n_S_;
    case ModulationKind::GaussianBi: return 0.5 * n_S_;
    default: throw ConfigError("quadrature variance is defined for Gaussian modulation only");
  }
}

double gaussian_density(double x, double sigma2) {
  if (!(sigma2 > 0.0)) throw DomainError("Gaussian variance must be positive");
  return std::exp(-x * x / (2.0 * sigma2)) / std::sqrt(2.0 * std::numbers::pi * sigma2);
}

double gamma_amplitude_density(double x, double nu, double n_S) {
  if (!(nu >= 0.5)) throw DomainError("Gamma amplitude density is singular for nu < 1/2");
  if (!(n_S > 0.0)) throw DomainError("Gamma amplitude density needs n_S > 0");
  const double x2 = x * x;
  const double log_c = nu * std::log(nu) - std::lgamma(nu) - nu * std::log(n_S);
  if (x2 == 0.0) return nu == 0.5 ? std::exp(log_c) : 0.0;
  return std::exp(log_c + (nu - 0.5) * std::log(x2) - nu * x2 / n_S);
}

int default_node_count(ModulationKind kind) {
  switch (kind) {
    case ModulationKind::GaussianUni: return 128;
    case ModulationKind::GaussianBi: return 64;
    case ModulationKind::GammaUni: return 128;
    case ModulationKind::BpskUni: return 2;
  }
  return 128;
}

QuadratureRule build_rule(const ModulationScheme& scheme, int node_count,
                          std::span<const double> breakpoints) {
  if (scheme.kind() == ModulationKind::BpskUni) {
    const double a = std::sqrt(scheme.n_S());
    if (a == 0.0) return point_mass(false);
    return QuadratureRule{{a, -a}, {}, {0.5, 0.5}};
  }
  check_node_count(node_count);
  switch (scheme.kind()) {
    case ModulationKind::GaussianUni: return gaussian_uni_rule(scheme.n_S(), node_count, breakpoints);
    case ModulationKind::GaussianBi: return gaussian_bi_rule(scheme.n_S(), node_count, breakpoints);
    case ModulationKind::GammaUni:
      return gamma_uni_rule(scheme.nu(), scheme.n_S(), node_count, breakpoints);
    default: break;
  }
  throw ConfigError("unsupported modulation kind for rule construction");
}

QuadratureRule gauss_hermite_rule(double sigma2, int n) {
  if (!(sigma2 > 0.0)) throw DomainError("Gauss-Hermite rule needs positive variance");
  const auto gh = gauss::hermite(n);
  QuadratureRule r;
  r.x.resize(n);
  r.w.resize(n);
  const double s = std::sqrt(2.0 * sigma2);
  for (int k = 0; k < n; ++k) {
    r.x[k] = s * gh.nodes[k];
    r.w[k] = gh.weights[k] / std::sqrt(std::numbers::pi);
  }
  return r;
}

}  // namespace wfh
