#pragma once

#include <cmath>

namespace r2r {

/// Neumaier-compensated running sum.
template <typename T>
class CompensatedSum {
 public:
  void add(T x) {
    const T t = sum_ + x;
    if (!std::isfinite(t)) {
      sum_ = t;
      return;
    }
    if (std::abs(sum_) >= std::abs(x))
      compensation_ += (sum_ - t) + x;
    else
      compensation_ += (x - t) + sum_;
    sum_ = t;
  }
  CompensatedSum& operator+=(T x) {
    add(x);
    return *this;
  }
  /// Overflow to infinity is sticky.
  T value() const { return std::isfinite(sum_) ? sum_ + compensation_ : sum_; }

 private:
  T sum_{};
  T compensation_{};
};

}  // namespace r2r
