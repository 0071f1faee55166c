#pragma once

#include <cstdint>
#include <vector>

#include "supernorm/ensemble.hpp"
#include "supernorm/primes.hpp"
#include "supernorm/rational.hpp"

namespace supernorm {

// Default enumeration scope of the brute-force oracle: p(30) = 5604
// partitions of size 30, 2^21 partitions of perimeter 22.
inline constexpr std::uint64_t kOracleSizeCap = 30;
inline constexpr std::uint64_t kOraclePerimeterCap = 22;

struct OracleOptions {
    bool allow_large = false;
};

// Ground truth by direct enumeration: the sum of N^-beta (or Nhat^-beta)
// over the ensemble at every n in [0, nmax]. Individual value at 0 is 1 for
// the size ensemble (the empty partition) and 0 for perimeter; every
// cumulative sum counts the empty partition once, including at n = 0.
// Requires integer beta; max-part ensembles are rejected (infinite sums).
std::vector<Rational> oracle_series(const PrimeTable& table, const EnsembleSpec& spec,
                                    std::uint64_t nmax, const OracleOptions& options = {});
Rational oracle_stat(const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t n,
                     const OracleOptions& options = {});

// Same enumeration, accumulated in double, for any real beta.
std::vector<double> oracle_series_float(const PrimeTable& table, const EnsembleSpec& spec,
                                        std::uint64_t nmax, const OracleOptions& options = {});

// Partial sum over partitions with largest part == n (individual) or <= n
// (cumulative) and size <= size_cutoff. A lower bound for the infinite
// max-part statistic, nondecreasing in the cutoff. Divergent
// configurations (norm with all parts allowed) are rejected.
Rational oracle_max_truncated(const PrimeTable& table, Weight weight, Restriction restriction,
                              Mode mode, std::uint64_t n, std::uint64_t size_cutoff, long beta = 1);

}  // namespace supernorm
