// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace pt3::detail {

/// Neumaier-compensated running sum.
template <typename T = double>
class BasicCompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            carry_ += (sum_ - t) + x;
        } else {
            carry_ += (x - t) + sum_;
        }
        sum_ = t;
    }
    T value() const { return sum_ + carry_; }

private:
    T sum_ = 0;
    T carry_ = 0;
};

using CompensatedSum = BasicCompensatedSum<double>;

inline double log_add_exp(double x, double y) {
    if (x == -std::numeric_limits<double>::infinity()) return y;
    if (y == -std::numeric_limits<double>::infinity()) return x;
    const double hi = x > y ? x : y;
    const double lo = x > y ? y : x;
    return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace pt3::detail
