#pragma once

// Classical Gauss rules from the Golub-Welsch eigenvalue construction.

#include <vector>

namespace wfh::gauss {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre on [-1, 1]. Cached per order.
const Rule& legendre(int n);

/// Gauss-Jacobi on [-1, 1] with weight (1 - t)^alpha (1 + t)^beta.
Rule jacobi(int n, double alpha, double beta);

/// Gauss-Hermite with weight exp(-t^2) on the real line.
Rule hermite(int n);

}  // namespace wfh::gauss
