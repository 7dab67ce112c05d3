#include "wfh/baselines.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wfh/errors.hpp"

namespace wfh {

namespace {

void check_energy(double n_S) {
  if (!std::isfinite(n_S) || n_S < 0.0)
    throw DomainError("mean received energy must be finite and non-negative, got " +
                      std::to_string(n_S));
}

}  // namespace

double shannon_sh(double n_S) {
  check_energy(n_S);
  return 0.5 * std::log1p(4.0 * n_S) / std::numbers::ln2;
}

double shannon_dh(double n_S) {
  check_energy(n_S);
  return std::log1p(n_S) / std::numbers::ln2;
}

double holevo(double n_S) {
  check_energy(n_S);
  if (n_S == 0.0) return 0.0;
  return ((n_S + 1.0) * std::log1p(n_S) - n_S * std::log(n_S)) / std::numbers::ln2;
}

double dd_upper_bound(double n_S) {
  if (!std::isfinite(n_S) || n_S < kDdMinEnergy)
    throw DomainError("DD bound needs n_S >= 1e-12, got " + std::to_string(n_S));
  const double e1g = std::exp(1.0 + kEulerGamma);
  const double a = 1.0 + (1.0 + e1g) * n_S + 2.0 * n_S * n_S;
  const double b = e1g * n_S + 2.0 * n_S * n_S;
  const double first = n_S * std::log2(a / b);
  const double second =
      std::log2(1.0 + (std::sqrt(a / (1.0 + n_S)) - 1.0) / std::sqrt(2.0 * std::numbers::e));
  return first + second;
}

ChannelParams::ChannelParams(double tau, double n_bar) : tau_(tau), n_bar_(n_bar) {
  if (!(tau > 0.0 && tau <= 1.0)) throw DomainError("transmissivity must lie in (0, 1]");
  check_energy(n_bar);
}

double find_crossover(const Curve& f, const Curve& g, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("crossover bracket must satisfy lo < hi");
  double dlo = f(lo) - g(lo);
  const double dhi = f(hi) - g(hi);
  if (dlo == 0.0) return lo;
  if (dhi == 0.0) return hi;
  if ((dlo > 0.0) == (dhi > 0.0))
    throw BracketError("no sign change of f - g on [" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double dm = f(mid) - g(mid);
    if (dm == 0.0) return mid;
    if ((dm > 0.0) == (dlo > 0.0))
      lo = mid, dlo = dm;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace wfh
