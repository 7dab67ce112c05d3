#include "wfh/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "wfh/errors.hpp"

namespace wfh::gauss {

namespace {

// Nodes are the eigenvalues of the Jacobi matrix, weights mu0 * v_0^2.
Rule golub_welsch(const std::vector<double>& diag, const std::vector<double>& offdiag,
                  double mu0) {
  const int n = int(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) J(i, i + 1) = J(i + 1, i) = offdiag[i];

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success) throw NumericError("Golub-Welsch eigensolver failed");

  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int k = 0; k < n; ++k) {
    r.nodes[k] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    r.weights[k] = mu0 * v * v;
  }
  return r;
}

void check_order(int n) {
  if (n < 1 || n > 4096) throw DomainError("Gauss rule order out of range: " + std::to_string(n));
}

}  // namespace

const Rule& legendre(int n) {
  static std::mutex mu;
  static std::map<int, Rule> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  check_order(n);
  std::vector<double> a(n, 0.0), b(n > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return cache.emplace(n, golub_welsch(a, b, 2.0)).first->second;
}

Rule jacobi(int n, double alpha, double beta) {
  check_order(n);
  if (!(alpha > -1.0) || !(beta > -1.0)) throw DomainError("Jacobi exponents must exceed -1");
  const double ab = alpha + beta;
  std::vector<double> a(n), b(n > 0 ? n - 1 : 0);
  a[0] = (beta - alpha) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    a[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    const double s = 2.0 * k + ab;
    b[k - 1] = std::sqrt(4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                         (s * s * (s + 1.0) * (s - 1.0)));
  }
  const double log_mu0 = (ab + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                         std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  return golub_welsch(a, b, std::exp(log_mu0));
}

Rule hermite(int n) {
  check_order(n);
  std::vector<double> a(n, 0.0), b(n > 0 ? n - 1 : 0);
  for (int k = 1; k < n; ++k) b[k - 1] = std::sqrt(k / 2.0);
  return golub_welsch(a, b, std::sqrt(std::numbers::pi));
}

}  // namespace wfh::gauss
