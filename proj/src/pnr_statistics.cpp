#include "wfh/pnr_statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "wfh/errors.hpp"
#include "wfh/numeric.hpp"

namespace wfh {

namespace {

const std::array<double, kLogFactorialCap + 1>& log_factorial_table() {
  static const auto table = [] {
    std::array<double, kLogFactorialCap + 1> t{};
    t[0] = 0.0;
    for (int n = 1; n <= kLogFactorialCap; ++n) t[n] = t[n - 1] + std::log(double(n));
    return t;
  }();
  return table;
}

void check_mean(double mu) {
  if (!std::isfinite(mu) || mu < 0.0)
    throw DomainError("truncated Poisson mean must be finite and non-negative, got " +
                      std::to_string(mu));
}

// Upper Poisson tail sum_{n >= M} e^-mu mu^n / n!, valid for mu < M where
// successive terms shrink geometrically.
double upper_tail(double mu, int M, double log_mu) {
  double term = std::exp(-mu + M * log_mu - log_factorial(M));
  if (term == 0.0) return 0.0;
  CompensatedSum sum;
  for (int n = M; n < M + 100000; ++n) {
    sum.add(term);
    term *= mu / double(n + 1);
    if (term < 1e-18 * sum.value()) break;
  }
  return sum.value();
}

std::vector<double>& scratch() {
  thread_local std::vector<double> buf;
  return buf;
}

}  // namespace

PnrResolution::PnrResolution(int max_count) : max_count_(max_count) {
  if (max_count < 1)
    throw DomainError("PNR resolution must be at least 1, got " + std::to_string(max_count));
}

double log_factorial(int n) {
  if (n < 0) throw DomainError("log_factorial of a negative integer");
  if (n <= kLogFactorialCap) return log_factorial_table()[n];
  return std::lgamma(double(n) + 1.0);
}

void truncated_poisson_into(double mu, int M, std::span<double> out) {
  check_mean(mu);
  if (M < 1 || out.size() < std::size_t(M) + 1)
    throw DomainError("truncated_poisson_into: output span too small for resolution");

  if (mu == 0.0) {
    std::fill(out.begin(), out.begin() + M + 1, 0.0);
    out[0] = 1.0;
    return;
  }

  const double log_mu = std::log(mu);
  CompensatedSum head;
  for (int n = 0; n < M; ++n) {
    out[n] = std::exp(-mu + n * log_mu - log_factorial(n));
    head.add(out[n]);
  }
  const double tail = mu < double(M) ? upper_tail(mu, M, log_mu) : 1.0 - head.value();
  out[M] = std::clamp(tail, 0.0, 1.0);
}

ClickProbabilities truncated_poisson(double mu, PnrResolution M) {
  ClickProbabilities q;
  q.mean_energy = mu;
  q.probs.resize(M.outcomes());
  truncated_poisson_into(mu, M.value(), q.probs);
  return q;
}

double log2_truncated_poisson(double mu, PnrResolution M, int n) {
  check_mean(mu);
  if (n < 0 || n > M.value())
    throw DomainError("outcome index " + std::to_string(n) + " outside 0.." +
                      std::to_string(M.value()));
  if (n < M.value()) {
    if (mu == 0.0) return n == 0 ? 0.0 : kLogZero;
    return (-mu + n * std::log(mu) - log_factorial(n)) / std::numbers::ln2;
  }
  auto& buf = scratch();
  buf.resize(M.outcomes());
  truncated_poisson_into(mu, M.value(), buf);
  return buf[n] > 0.0 ? std::log2(buf[n]) : kLogZero;
}

double truncated_poisson_entropy(double mu, int M) {
  check_mean(mu);
  if (mu == 0.0) return 0.0;
  auto& buf = scratch();
  buf.resize(std::size_t(M) + 1);
  truncated_poisson_into(mu, M, buf);

  const double log_mu = std::log(mu);
  double h = 0.0;
  for (int n = 0; n < M; ++n) {
    if (buf[n] > kProbabilityFloor) h -= buf[n] * (-mu + n * log_mu - log_factorial(n));
  }
  if (buf[M] > kProbabilityFloor) h -= buf[M] * std::log(buf[M]);
  return h / std::numbers::ln2;
}

}  // namespace wfh
