#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "supernorm/primes.hpp"

namespace supernorm {

// Closed integer interval.
struct IntRange {
    std::uint64_t lo = 0;
    std::uint64_t hi = 0;
};

// Outcome of checking one explicit inequality at every point of a range.
// margin is the slack (bound minus deviation); it is negative exactly where
// the inequality fails.
struct BoundReport {
    std::string bound_name;
    IntRange range;
    bool all_hold = true;
    double worst_margin = 0.0;
    std::uint64_t worst_at = 0;
    std::uint64_t points_checked = 0;

    // Keeps the smallest margin; ties resolve to the earliest argument since
    // callers scan in ascending order.
    void record(std::uint64_t at, double margin);
};

// e.g. "mertens_product on [2278383, 10000000]: holds, worst margin 4.27e-08 at 2278383 (2 points)".
std::string summarize(const BoundReport& report, int precision = 12);

// Optional per-point sink for detailed output: (bound, argument, margin).
using MarginObserver = std::function<void(std::string_view, std::uint64_t, double)>;

// Sieve threshold above which the reciprocal-prime-sum and Mertens-product
// estimates with explicit constants are known to hold.
inline constexpr std::uint64_t kMertensThreshold = 2'278'383;

// n-th prime estimates for n >= 6:
//   nth_prime_bracket        n log n <= p_n <= n (log n + log log n)
//   log_nth_prime_bracket    log n + log log n <= log p_n <= log n + log log n + log log n / log n
//   loglog_nth_prime         |log log p_n - log log n - log log n / log n| <= 2 (log log n / log n)^2
std::vector<BoundReport> verify_prime_bounds(const PrimeTable& table, IntRange n_range,
                                             const MarginObserver& observer = {});

// For x in the range (x >= kMertensThreshold):
//   reciprocal_prime_sum          |sum_{p<=x} 1/p - log log x - M| <= 1/(5 log^3 x)
//   mertens_product               |P(x) e^gamma log x - 1| <= 1/(5 log^3 x)
//   reciprocal_mertens_product    |1/(P(x) e^gamma log x) - 1| <= 1/(4 log^3 x)
// Both sides are step functions of x jumping only at primes, so each step
// is checked at its left end and at its right-hand limit, which covers the
// full real interval.
std::vector<BoundReport> verify_mertens_bounds(const PrimeTable& table, IntRange x_range,
                                               const MarginObserver& observer = {});

// sum_{j<=n} 1/log p_j <= 3n / log n for n >= 2.
BoundReport verify_log_prime_sum_bound(const PrimeTable& table, IntRange n_range,
                                       const MarginObserver& observer = {});

}  // namespace supernorm
