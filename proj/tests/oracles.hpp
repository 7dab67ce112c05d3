#pragma once

// Test-only reference implementations, written independently of the library
// (direct formulas, brute-force enumeration, no shared helpers).

#include <cmath>
#include <vector>

namespace oracle {

inline double poisson(double mu, int n) {
  if (mu == 0.0) return n == 0 ? 1.0 : 0.0;
  return std::exp(-mu) * std::pow(mu, n) / std::tgamma(n + 1.0);
}

inline std::vector<double> truncated_poisson(double mu, int M) {
  std::vector<double> q(M + 1);
  double s = 0.0;
  for (int n = 0; n < M; ++n) s += q[n] = poisson(mu, n);
  q[M] = 1.0 - s;
  return q;
}

/// P(n1, n2 | x) for a real amplitude x, LO z at theta = 0.
inline std::vector<std::vector<double>> wh(double x, double z, int M) {
  const auto a = truncated_poisson((x + z) * (x + z) / 2.0, M);
  const auto b = truncated_poisson((x - z) * (x - z) / 2.0, M);
  std::vector<std::vector<double>> p(M + 1, std::vector<double>(M + 1));
  for (int i = 0; i <= M; ++i)
    for (int j = 0; j <= M; ++j) p[i][j] = a[i] * b[j];
  return p;
}

/// Difference of two independent Poisson counts, by direct double sum.
inline double skellam(double mu1, double mu2, int d, int terms = 200) {
  double s = 0.0;
  for (int k = 0; k < terms; ++k) {
    const int n1 = k + std::max(d, 0);
    const int n2 = k + std::max(-d, 0);
    s += poisson(mu1, n1) * poisson(mu2, n2);
  }
  return s;
}

/// Mutual information of BPSK inputs +-sqrt(n_S) under WH(M, z, theta = 0),
/// enumerating the joint distribution sum_x sum_y p(x) p(y|x) log p(y|x)/p(y).
inline double bpsk_wh_information(double n_S, double z, int M) {
  const double a = std::sqrt(n_S);
  const auto p_plus = wh(a, z, M);
  const auto p_minus = wh(-a, z, M);
  double I = 0.0;
  for (int i = 0; i <= M; ++i)
    for (int j = 0; j <= M; ++j) {
      const double py = 0.5 * p_plus[i][j] + 0.5 * p_minus[i][j];
      for (double pyx : {p_plus[i][j], p_minus[i][j]})
        if (pyx > 0.0) I += 0.5 * pyx * std::log2(pyx / py);
    }
  return I;
}

/// Skellam raw fourth moment averaged over x ~ N(0, s2), divided by z^4,
/// from the cumulants k1 = k3 = 2xz, k2 = k4 = x^2 + z^2.
inline double gaussian_avg_fourth_moment(double s2, double z2) {
  const double q4 = 3.0 * (1.0 + 4.0 * s2) * (1.0 + 4.0 * s2);
  return q4 + (s2 + 9.0 * s2 * s2) / (z2 * z2) + (1.0 + 22.0 * s2 + 72.0 * s2 * s2) / z2;
}

}  // namespace oracle
