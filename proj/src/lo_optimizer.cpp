#include "wfh/lo_optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wfh/errors.hpp"
#include "wfh/information.hpp"

namespace wfh {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

struct Probe {
  double log_z2;
  double bits;
};

class LogObjective {
 public:
  explicit LogObjective(const ZObjective& f) : f_(f) {}

  double operator()(double log_z2) const {
    const double z = std::exp(0.5 * log_z2);
    const double v = f_(z);
    if (!std::isfinite(v))
      throw NumericError("objective is not finite at z^2 = " + std::to_string(z * z));
    return v;
  }

 private:
  const ZObjective& f_;
};

// Golden-section maximization on [a, b]; `best` enters holding an interior
// probe and leaves holding the best point seen.
void golden_refine(const LogObjective& f, double a, double b, double tol, Probe& best) {
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c), fd = f(d);
  auto keep = [&](double x, double v) {
    if (v > best.bits) best = {x, v};
  };
  keep(c, fc);
  keep(d, fd);
  while (b - a > tol) {
    if (fc >= fd) {
      b = d, d = c, fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
      keep(c, fc);
    } else {
      a = c, c = d, fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
      keep(d, fd);
    }
  }
}

}  // namespace

std::vector<double> default_nu_grid() {
  std::vector<double> g{0.5};
  const double lo = std::log(0.6), hi = std::log(1e3);
  for (int k = 0; k < 25; ++k) g.push_back(std::exp(lo + (hi - lo) * k / 24.0));
  g.push_back(kBpskShape);
  return g;
}

void OptimizerSettings::validate() const {
  if (!(z2_min > 0.0) || !(z2_min < z2_max) || !std::isfinite(z2_max))
    throw ConfigError("optimizer needs 0 < z2_min < z2_max");
  if (coarse_points < 3) throw ConfigError("optimizer needs at least 3 coarse points");
  if (!(refine_tol > 0.0)) throw ConfigError("refine_tol must be positive");
  if (starts < 1) throw ConfigError("optimizer needs at least one refinement start");
  if (!(nu_tie_tol_bits >= 0.0)) throw ConfigError("nu tie tolerance must be non-negative");
  for (double nu : nu_grid)
    if (!(nu >= 0.5)) throw ConfigError("nu grid entries must be >= 1/2");
}

ZOptimum optimize_z(const ZObjective& objective, const OptimizerSettings& s) {
  s.validate();
  const LogObjective f(objective);
  const double lo = std::log(s.z2_min), hi = std::log(s.z2_max);
  const int n = s.coarse_points;
  std::vector<Probe> grid(n);
  for (int k = 0; k < n; ++k) {
    const double l = lo + (hi - lo) * k / (n - 1);
    grid[k] = {l, f(l)};
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return grid[a].bits > grid[b].bits; });

  ZOptimum out;
  out.coarse_best = grid[order[0]].bits;
  const double tol = std::log1p(s.refine_tol);
  Probe overall = grid[order[0]];
  for (int r = 0; r < std::min(s.starts, n); ++r) {
    const int i = order[r];
    Probe best = grid[i];
    golden_refine(f, grid[std::max(i - 1, 0)].log_z2, grid[std::min(i + 1, n - 1)].log_z2, tol,
                  best);
    out.starts.push_back({std::exp(0.5 * best.log_z2), best.bits});
    if (best.bits > overall.bits) overall = best;
  }
  out.z_opt = std::exp(0.5 * overall.log_z2);
  out.bits = overall.bits;
  return out;
}

ZOptimum optimize_z(DetectorKind kind, PnrResolution M, const ModulationScheme& scheme,
                    int node_count, const OptimizerSettings& settings) {
  const ZObjective f = [&](double z) {
    return mutual_information(Detector{kind, DetectorConfig(M, z)}, scheme, node_count);
  };
  return optimize_z(f, settings);
}

ZNuOptimum optimize_z_nu(PnrResolution M, double n_S, const OptimizerSettings& settings,
                         int node_count) {
  settings.validate();
  if (settings.nu_grid.empty()) throw ConfigError("empty nu grid");
  ZNuOptimum out;
  for (double nu : settings.nu_grid) {
    const auto scheme = ModulationScheme::from_shape(nu, n_S);
    out.per_nu.push_back({nu, optimize_z(DetectorKind::WH, M, scheme, node_count, settings)});
  }
  // Strict argmax, except that the first grid entry (the Gaussian) is kept
  // when it is within the tie tolerance of the best.
  const auto* pick = &out.per_nu.front();
  for (const auto& r : out.per_nu)
    if (r.opt.bits > pick->opt.bits) pick = &r;
  if (out.per_nu.front().opt.bits >= pick->opt.bits - settings.nu_tie_tol_bits) pick = &out.per_nu.front();
  out.nu_opt = pick->nu;
  out.z_opt = pick->opt.z_opt;
  out.bits = pick->opt.bits;
  return out;
}

}  // namespace wfh
