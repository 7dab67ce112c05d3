#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace wfh {

/// Probabilities at or below this value count as exact zeros in entropy sums.
inline constexpr double kProbabilityFloor = 1e-300;

/// Neumaier compensated summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// Element-wise compensated accumulator for probability vectors.
class CompensatedVector {
 public:
  explicit CompensatedVector(std::size_t n) : sum_(n, 0.0), comp_(n, 0.0) {}

  std::size_t size() const noexcept { return sum_.size(); }

  void add(std::size_t i, double v) noexcept {
    const double s = sum_[i];
    const double t = s + v;
    if (std::abs(s) >= std::abs(v))
      comp_[i] += (s - t) + v;
    else
      comp_[i] += (v - t) + s;
    sum_[i] = t;
  }

  std::vector<double> values() const {
    std::vector<double> out(sum_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = sum_[i] + comp_[i];
    return out;
  }

 private:
  std::vector<double> sum_;
  std::vector<double> comp_;
};

}  // namespace wfh
