#include "wfh/detectors.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wfh/errors.hpp"

namespace wfh {

CoherentAmplitude::CoherentAmplitude(double re, double im) : re_(re), im_(im) {
  if (!std::isfinite(re) || !std::isfinite(im))
    throw DomainError("coherent amplitude must have finite components");
}

DetectorConfig::DetectorConfig(PnrResolution M, double z, double theta)
    : M_(M), z_(z), theta_(theta) {
  if (!std::isfinite(z) || z < 0.0)
    throw DomainError("LO amplitude must be finite and non-negative, got " + std::to_string(z));
  if (!(theta >= 0.0 && theta < std::numbers::pi))
    throw DomainError("LO phase must lie in [0, pi), got " + std::to_string(theta));
}

std::string_view to_string(DetectorKind kind) {
  switch (kind) {
    case DetectorKind::WH: return "WH";
    case DetectorKind::HL: return "HL";
    case DetectorKind::DW: return "DW";
  }
  return "?";
}

DetectorKind parse_detector_kind(std::string_view s) {
  if (s == "WH" || s == "wh") return DetectorKind::WH;
  if (s == "HL" || s == "hl") return DetectorKind::HL;
  if (s == "DW" || s == "dw") return DetectorKind::DW;
  throw ConfigError("unknown detector '" + std::string(s) + "' (expected wh, hl or dw)");
}

BranchEnergies branch_energies(CoherentAmplitude alpha, const DetectorConfig& cfg) {
  // theta = pi/2 is stored exactly as a double; avoid cos(pi/2) ~ 6e-17 leaking in.
  double c = std::cos(cfg.theta());
  double s = std::sin(cfg.theta());
  if (cfg.theta() == std::numbers::pi / 2) c = 0.0, s = 1.0;
  const double lo_re = cfg.z() * c;
  const double lo_im = cfg.z() * s;
  const double pr = alpha.re() + lo_re, pi_ = alpha.im() + lo_im;
  const double mr = alpha.re() - lo_re, mi = alpha.im() - lo_im;
  return {0.5 * (pr * pr + pi_ * pi_), 0.5 * (mr * mr + mi * mi)};
}

WhOutcomeDistribution::WhOutcomeDistribution(int M, std::vector<double> probs)
    : M_(M), probs_(std::move(probs)) {
  if (probs_.size() != std::size_t(M + 1) * (M + 1))
    throw DomainError("WH distribution needs (M+1)^2 entries");
}

std::size_t WhOutcomeDistribution::index(int n1, int n2) const {
  if (n1 < 0 || n1 > M_ || n2 < 0 || n2 > M_) throw DomainError("WH outcome out of range");
  return index(n1, n2, M_);
}

HlOutcomeDistribution::HlOutcomeDistribution(int M, std::vector<double> probs)
    : M_(M), probs_(std::move(probs)) {
  if (probs_.size() != std::size_t(2 * M + 1))
    throw DomainError("HL distribution needs 2M+1 entries");
}

double HlOutcomeDistribution::at(int delta) const {
  if (delta < -M_ || delta > M_) throw DomainError("click difference out of range");
  return probs_[delta + M_];
}

DwOutcomeDistribution::DwOutcomeDistribution(int M, std::vector<double> probs)
    : M_(M), probs_(std::move(probs)) {
  const std::size_t k = std::size_t(M + 1) * (M + 1);
  if (probs_.size() != k * k) throw DomainError("DW distribution needs (M+1)^4 entries");
}

double DwOutcomeDistribution::operator()(int n1, int n2, int m1, int m2) const {
  for (int v : {n1, n2, m1, m2})
    if (v < 0 || v > M_) throw DomainError("DW outcome out of range");
  const std::size_t k = std::size_t(M_ + 1) * (M_ + 1);
  return probs_[WhOutcomeDistribution::index(n1, n2, M_) * k +
                WhOutcomeDistribution::index(m1, m2, M_)];
}

WhOutcomeDistribution wh_distribution(CoherentAmplitude alpha, const DetectorConfig& cfg) {
  const int M = cfg.M();
  const auto [mu_plus, mu_minus] = branch_energies(alpha, cfg);
  std::vector<double> qp(M + 1), qm(M + 1);
  truncated_poisson_into(mu_plus, M, qp);
  truncated_poisson_into(mu_minus, M, qm);

  std::vector<double> p(std::size_t(M + 1) * (M + 1));
  for (int n1 = 0; n1 <= M; ++n1)
    for (int n2 = 0; n2 <= M; ++n2) p[WhOutcomeDistribution::index(n1, n2, M)] = qp[n1] * qm[n2];
  return {M, std::move(p)};
}

HlOutcomeDistribution hl_from_wh(const WhOutcomeDistribution& wh) {
  const int M = wh.M();
  std::vector<double> s(2 * M + 1, 0.0);
  for (int n1 = 0; n1 <= M; ++n1)
    for (int n2 = 0; n2 <= M; ++n2) s[n1 - n2 + M] += wh(n1, n2);
  return {M, std::move(s)};
}

HlOutcomeDistribution hl_distribution(CoherentAmplitude alpha, const DetectorConfig& cfg) {
  return hl_from_wh(wh_distribution(alpha, cfg));
}

DetectorConfig dw_arm_config(PnrResolution M, double z, int arm) {
  if (arm != 0 && arm != 1) throw DomainError("DW arm index must be 0 or 1");
  return {M, z, arm == 0 ? 0.0 : std::numbers::pi / 2};
}

DwOutcomeDistribution dw_distribution(CoherentAmplitude alpha, PnrResolution M, double z) {
  const CoherentAmplitude half(alpha.re() / std::numbers::sqrt2, alpha.im() / std::numbers::sqrt2);
  const auto q = wh_distribution(half, dw_arm_config(M, z, 0));
  const auto p = wh_distribution(half, dw_arm_config(M, z, 1));

  const auto qf = q.flat();
  const auto pf = p.flat();
  std::vector<double> out(qf.size() * pf.size());
  for (std::size_t i = 0; i < qf.size(); ++i)
    for (std::size_t j = 0; j < pf.size(); ++j) out[i * pf.size() + j] = qf[i] * pf[j];
  return {M.value(), std::move(out)};
}

double hl_difference_moment(const DetectorConfig& cfg, CoherentAmplitude alpha, int order) {
  if (order < 1 || order > 4)
    throw DomainError("difference-photocurrent moment order must be 1..4, got " +
                      std::to_string(order));
  const auto s = hl_distribution(alpha, cfg);
  double m = 0.0;
  for (int d = -s.M(); d <= s.M(); ++d) m += std::pow(double(d), order) * s.at(d);
  return m;
}

}  // namespace wfh
