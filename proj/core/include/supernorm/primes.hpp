#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "supernorm/rational.hpp"

namespace supernorm {

struct SieveOptions {
    // Bytes of sieve window processed at a time; each byte covers one odd number.
    std::size_t segment_bytes = std::size_t{1} << 18;
    // Upper bound on the memory the finished table may occupy.
    std::size_t memory_budget_bytes = std::size_t{1} << 30;
};

// All primes up to `limit`, ascending. Immutable once built, so a table can
// be shared freely between threads.
class PrimeTable {
public:
    static PrimeTable build(std::uint64_t limit, const SieveOptions& options = {});

    // Cache format: "PTBLv001", little-endian u64 limit, then the primes as
    // little-endian u64. Loading rejects a bad magic, a short file, or a list
    // that is not strictly increasing and bounded by the limit.
    static PrimeTable load(const std::filesystem::path& path);
    void save(const std::filesystem::path& path) const;

    std::uint64_t limit() const { return limit_; }
    std::size_t count() const { return primes_.size(); }
    std::span<const std::uint64_t> primes() const { return primes_; }

    // p_n with the convention p_0 = 1. Throws std::out_of_range naming the
    // sieve limit needed when n exceeds count().
    std::uint64_t nth(std::size_t n) const;

    bool is_prime(std::uint64_t x) const;
    // Number of primes <= x (x may exceed the limit only when x <= limit).
    std::size_t pi(std::uint64_t x) const;

private:
    PrimeTable(std::uint64_t limit, std::vector<std::uint64_t> primes)
        : limit_(limit), primes_(std::move(primes)) {}

    std::uint64_t limit_ = 0;
    std::vector<std::uint64_t> primes_;
};

// Smallest sieve limit guaranteed to contain p_n, from p_n <= n(log n + log log n)
// for n >= 6.
std::uint64_t sieve_limit_for_index(std::size_t n);

// Estimated pi(x), an overestimate used for reservations and memory budgeting.
std::size_t prime_count_upper_estimate(std::uint64_t x);

// sum_{p <= x} 1/p, compensated.
double reciprocal_prime_sum(const PrimeTable& table, double x);

// P(x) = prod_{p <= x} (1 - 1/p).
double mertens_product(const PrimeTable& table, double x);
Rational mertens_product_exact(const PrimeTable& table, double x);

// 1/P(x) = prod_{p <= x} p/(p - 1). Direct product for short products,
// exp of a compensated log sum otherwise.
double reciprocal_mertens_product(const PrimeTable& table, double x);
Rational reciprocal_mertens_product_exact(const PrimeTable& table, double x);

}  // namespace supernorm
