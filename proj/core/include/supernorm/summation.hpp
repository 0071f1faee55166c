#pragma once

#include <cmath>
#include <cstddef>
#include <span>

namespace supernorm {

// Neumaier's variant of Kahan summation: the running compensation also
// captures the error when the incoming term dominates the partial sum.
class CompensatedSum {
public:
    constexpr CompensatedSum() = default;
    constexpr explicit CompensatedSum(double initial) : sum_(initial) {}

    constexpr void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) {
            compensation_ += (sum_ - t) + x;
        } else {
            compensation_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    constexpr CompensatedSum& operator+=(double x) {
        add(x);
        return *this;
    }

    constexpr double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

inline double compensated_sum(std::span<const double> xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    return s.value();
}

}  // namespace supernorm
