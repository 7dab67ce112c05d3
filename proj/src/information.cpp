#include "wfh/information.hpp"

#include <Eigen/Core>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wfh/baselines.hpp"
#include "wfh/errors.hpp"
#include "wfh/numeric.hpp"

namespace wfh {

namespace {

constexpr double kNegativeTolerance = 1e-9;
constexpr std::size_t kDwBlock = 2048;

// Fills q with the truncated Poisson law and returns its entropy in nats.
double poisson_row(double mu, int M, double* q) {
  truncated_poisson_into(mu, M, std::span<double>(q, std::size_t(M) + 1));
  if (mu == 0.0) return 0.0;
  const double log_mu = std::log(mu);
  double h = 0.0;
  for (int n = 0; n < M; ++n)
    if (q[n] > kProbabilityFloor) h -= q[n] * (-mu + n * log_mu - log_factorial(n));
  if (q[M] > kProbabilityFloor) h -= q[M] * std::log(q[M]);
  return h;
}

double entropy_nats(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > kProbabilityFloor) h -= v * std::log(v);
  return h;
}

void check_rule(const QuadratureRule& rule) {
  if (rule.x.size() != rule.w.size() || (rule.bivariate() && rule.y.size() != rule.w.size()))
    throw ConfigError("quadrature rule has inconsistent node and weight counts");
  if (rule.w.empty()) throw ConfigError("empty quadrature rule");
}

double finish(double h_marginal_bits, double h_cond_nats) {
  const double I = h_marginal_bits - h_cond_nats / std::numbers::ln2;
  if (!std::isfinite(I)) throw NumericError("mutual information is not finite");
  if (I < 0.0) {
    if (I > -kNegativeTolerance) return 0.0;
    throw NumericError("mutual information is negative beyond quadrature noise: " +
                       std::to_string(I));
  }
  return I;
}

double wh_or_hl(const Detector& det, const QuadratureRule& rule) {
  const int M = det.cfg.M();
  const int K = M + 1;
  const bool hl = det.kind == DetectorKind::HL;
  CompensatedVector marginal(hl ? std::size_t(2 * M + 1) : std::size_t(K) * K);
  CompensatedSum cond;
  std::vector<double> qp(K), qm(K), s(2 * M + 1);

  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double w = rule.w[i];
    const auto mu = branch_energies(CoherentAmplitude(rule.x[i], 0.0), det.cfg);
    const double hp = poisson_row(mu.plus, M, qp.data());
    const double hm = poisson_row(mu.minus, M, qm.data());
    if (hl) {
      std::fill(s.begin(), s.end(), 0.0);
      for (int n1 = 0; n1 < K; ++n1)
        for (int n2 = 0; n2 < K; ++n2) s[n1 - n2 + M] += qp[n1] * qm[n2];
      for (std::size_t d = 0; d < s.size(); ++d) marginal.add(d, w * s[d]);
      cond.add(w * entropy_nats(s));
    } else {
      for (int n1 = 0; n1 < K; ++n1) {
        const double a = w * qp[n1];
        for (int n2 = 0; n2 < K; ++n2) marginal.add(std::size_t(n1) * K + n2, a * qm[n2]);
      }
      cond.add(w * (hp + hm));
    }
  }
  return finish(shannon_entropy(marginal.values()), cond.value());
}

// The DW marginal is sum_i w_i A_i B_i^T over nodes, with A_i and B_i the two
// arm distributions, evaluated block by block as a matrix product. For a
// sign-symmetric rule only the open first quadrant is summed: x -> -x swaps
// (n1, n2) of arm 0 and y -> -y swaps (m1, m2) of arm 1, leaving the
// conditional entropies unchanged.
double dw(const Detector& det, const QuadratureRule& rule) {
  const int M = det.cfg.M();
  const int K = (M + 1) * (M + 1);
  const auto arm0 = dw_arm_config(det.cfg.resolution(), det.cfg.z(), 0);
  const auto arm1 = dw_arm_config(det.cfg.resolution(), det.cfg.z(), 1);

  const bool fold = rule.sign_symmetric;
  std::vector<std::size_t> nodes;
  for (std::size_t i = 0; i < rule.size(); ++i)
    if (!fold || (rule.x[i] > 0.0 && rule.y[i] > 0.0)) nodes.push_back(i);
  const double multiplicity = fold ? 4.0 : 1.0;

  CompensatedVector marginal(std::size_t(K) * K);
  CompensatedSum cond;
  std::vector<double> qp(M + 1), qm(M + 1);
  Eigen::MatrixXd A(K, kDwBlock), B(K, kDwBlock), C(K, K);

  for (std::size_t start = 0; start < nodes.size(); start += kDwBlock) {
    const std::size_t b = std::min(kDwBlock, nodes.size() - start);
    for (std::size_t j = 0; j < b; ++j) {
      const std::size_t i = nodes[start + j];
      const double w = rule.w[i];
      const CoherentAmplitude half(rule.x[i] / std::numbers::sqrt2,
                                   rule.y[i] / std::numbers::sqrt2);
      double h = 0.0;
      const auto m0 = branch_energies(half, arm0);
      h += poisson_row(m0.plus, M, qp.data());
      h += poisson_row(m0.minus, M, qm.data());
      for (int n1 = 0; n1 <= M; ++n1)
        for (int n2 = 0; n2 <= M; ++n2) A(n1 * (M + 1) + n2, j) = w * qp[n1] * qm[n2];
      const auto m1 = branch_energies(half, arm1);
      h += poisson_row(m1.plus, M, qp.data());
      h += poisson_row(m1.minus, M, qm.data());
      for (int n1 = 0; n1 <= M; ++n1)
        for (int n2 = 0; n2 <= M; ++n2) B(n1 * (M + 1) + n2, j) = qp[n1] * qm[n2];
      cond.add(multiplicity * w * h);
    }
    C.noalias() = A.leftCols(b) * B.leftCols(b).transpose();
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < K; ++l) marginal.add(std::size_t(k) * K + l, C(k, l));
  }

  auto p = marginal.values();
  if (fold) {
    std::vector<int> swap(K);
    for (int n1 = 0; n1 <= M; ++n1)
      for (int n2 = 0; n2 <= M; ++n2) swap[n1 * (M + 1) + n2] = n2 * (M + 1) + n1;
    std::vector<double> full(p.size());
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < K; ++l) {
        const auto at = [&](int a, int c) { return p[std::size_t(a) * K + c]; };
        full[std::size_t(k) * K + l] = at(k, l) + at(swap[k], l) + at(k, swap[l]) +
                                       at(swap[k], swap[l]);
      }
    p = std::move(full);
  }
  return finish(shannon_entropy(p), cond.value());
}

}  // namespace

double shannon_entropy(std::span<const double> p) {
  if (p.empty()) throw DomainError("entropy of an empty distribution");
  CompensatedSum total;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw DomainError("probabilities must be finite and non-negative");
    total.add(v);
  }
  const double s = total.value();
  if (std::abs(s - 1.0) > 1e-6)
    throw DomainError("probabilities sum to " + std::to_string(s) + ", not 1");
  double h = 0.0;
  for (double v : p) {
    const double q = v / s;
    if (q > kProbabilityFloor) h -= q * std::log2(q);
  }
  return h;
}

std::vector<double> detector_kinks(const Detector& det) {
  const double z = det.cfg.z();
  if (z == 0.0) return {0.0};
  switch (det.kind) {
    case DetectorKind::WH:
    case DetectorKind::HL:
      if (det.cfg.theta() != 0.0) return {};
      return {-z, z};
    case DetectorKind::DW:
      return {-std::numbers::sqrt2 * z, 0.0, std::numbers::sqrt2 * z};
  }
  return {};
}

double mutual_information(const Detector& det, const ModulationScheme& scheme,
                          const QuadratureRule& rule) {
  check_rule(rule);
  const bool want_bi = det.kind == DetectorKind::DW;
  if (scheme.bivariate() != want_bi || rule.bivariate() != want_bi)
    throw ConfigError(std::string(to_string(det.kind)) + " needs a " +
                      (want_bi ? "bi-variate" : "uni-variate") + " modulation and rule");
  if (scheme.n_S() == 0.0) return 0.0;
  return want_bi ? dw(det, rule) : wh_or_hl(det, rule);
}

double mutual_information(const Detector& det, const ModulationScheme& scheme, int node_count) {
  if (node_count == 0) node_count = default_node_count(scheme.kind());
  const auto kinks = detector_kinks(det);
  return mutual_information(det, scheme, build_rule(scheme, node_count, kinks));
}

double pie(double bits_per_use, double n_S) {
  if (!(n_S > 0.0)) throw DomainError("PIE needs n_S > 0");
  return bits_per_use / n_S;
}

RatioGain ratio_and_gain(double bits_per_use, double n_S, Baseline baseline) {
  if (!(n_S > 0.0)) throw DomainError("ratio and gain need n_S > 0");
  double c = 0.0;
  switch (baseline) {
    case Baseline::SH: c = shannon_sh(n_S); break;
    case Baseline::DH: c = shannon_dh(n_S); break;
    case Baseline::DD: c = dd_upper_bound(n_S); break;
  }
  if (!(c > 0.0)) throw DomainError("baseline capacity is zero");
  const double r = bits_per_use / c;
  return {r, r - 1.0};
}

Baseline shannon_baseline(DetectorKind kind) {
  return kind == DetectorKind::DW ? Baseline::DH : Baseline::SH;
}

}  // namespace wfh
