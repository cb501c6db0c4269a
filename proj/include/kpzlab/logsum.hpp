#pragma once

#include <cmath>
#include <limits>

namespace kpzlab {

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double logaddexp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  double m = a > b ? a : b;
  return m + std::log1p(std::exp((a > b ? b : a) - m));
}

// Streaming log-sum-exp accumulator. Keeps a running maximum and a rescaled
// sum so that |n*f| up to ~700 per term never overflows.
class LogSumAcc {
 public:
  void add(double term) {
    if (term == kNegInf) return;
    if (term <= max_) {
      sum_ += std::exp(term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - term) + 1.0;
      max_ = term;
    }
  }

  // log(sum of exp(term) + extra scaled mass), -inf when empty
  double value() const {
    if (max_ == kNegInf || sum_ <= 0.0) return kNegInf;
    return max_ + std::log(sum_);
  }

  bool empty() const { return max_ == kNegInf; }

 private:
  double max_ = kNegInf;
  double sum_ = 0.0;
};

}  // namespace kpzlab
