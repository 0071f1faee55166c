#include "supernorm/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "supernorm/enumerate.hpp"
#include "supernorm/errors.hpp"

namespace supernorm {
namespace {

void check_scope(const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t nmax,
                 const OracleOptions& options) {
    if (spec.ensemble == Ensemble::max_part) {
        throw unsupported_error("the oracle cannot enumerate max-part ensembles (infinite sets); "
                                "use oracle_max_truncated");
    }
    const std::uint64_t cap =
        spec.ensemble == Ensemble::size ? kOracleSizeCap : kOraclePerimeterCap;
    if (nmax > cap && !options.allow_large) {
        throw resource_error("oracle scope for the " + std::string(name(spec.ensemble)) +
                             " ensemble is n <= " + std::to_string(cap) + " (requested " +
                             std::to_string(nmax) + "); pass allow_large to override");
    }
    if (spec.weight == Weight::supernorm && nmax > table.count()) {
        (void)table.nth(nmax);  // throws, naming the limit needed
    }
}

// Calls add(n, lambda) for every partition in the individual ensembles 0..nmax.
template <class Add>
void enumerate_ensembles(const EnsembleSpec& spec, std::uint64_t nmax, Add&& add) {
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        auto visit = [&](const Partition& lambda) { add(n, lambda); };
        if (spec.ensemble == Ensemble::size) {
            for_each_partition_by_size(n, spec.restriction, visit);
        } else {
            for_each_partition_by_perimeter(n, spec.restriction, visit);
        }
    }
}

BigInt weight_of(const PrimeTable& table, Weight weight, const Partition& lambda) {
    return weight == Weight::norm ? norm(lambda) : supernorm(table, lambda);
}

// N^-beta as an exact rational.
Rational term(const BigInt& w, long beta) {
    if (beta == 0) return Rational(1);
    const unsigned long e = static_cast<unsigned long>(beta < 0 ? -beta : beta);
    const BigInt wp = pow(w, e);
    return beta > 0 ? Rational(BigInt(1), wp) : Rational(wp);
}

template <class T>
void accumulate_cumulative(std::vector<T>& values, Mode mode) {
    if (mode != Mode::cumulative) return;
    // Empty partition once, then each individual ensemble from n = 1 on.
    values[0] = T(1);
    for (std::size_t n = 1; n < values.size(); ++n) values[n] += values[n - 1];
}

}  // namespace

std::vector<Rational> oracle_series(const PrimeTable& table, const EnsembleSpec& spec,
                                    std::uint64_t nmax, const OracleOptions& options) {
    check_scope(table, spec, nmax, options);
    const auto beta = integer_beta(spec.beta);
    if (!beta) {
        throw unsupported_error("exact oracle needs an integer beta; use oracle_series_float");
    }
    // Sub-sums per (n, largest part) keep intermediate denominators small.
    std::vector<std::vector<Rational>> by_largest(nmax + 1);
    for (std::uint64_t n = 0; n <= nmax; ++n) by_largest[n].resize(n + 1);
    enumerate_ensembles(spec, nmax, [&](std::uint64_t n, const Partition& lambda) {
        by_largest[n][lambda.largest_part()] += term(weight_of(table, spec.weight, lambda), *beta);
    });
    std::vector<Rational> values(nmax + 1);
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        for (const auto& s : by_largest[n]) values[n] += s;
    }
    accumulate_cumulative(values, spec.mode);
    return values;
}

Rational oracle_stat(const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t n,
                     const OracleOptions& options) {
    return oracle_series(table, spec, n, options)[n];
}

std::vector<double> oracle_series_float(const PrimeTable& table, const EnsembleSpec& spec,
                                        std::uint64_t nmax, const OracleOptions& options) {
    check_scope(table, spec, nmax, options);
    std::vector<double> values(nmax + 1, 0.0);
    enumerate_ensembles(spec, nmax, [&](std::uint64_t n, const Partition& lambda) {
        double log_w = 0.0;
        for (const auto& e : lambda.entries()) {
            const double base = spec.weight == Weight::norm
                                    ? static_cast<double>(e.part)
                                    : static_cast<double>(table.nth(e.part));
            log_w += e.multiplicity * std::log(base);
        }
        values[n] += std::exp(-spec.beta * log_w);
    });
    accumulate_cumulative(values, spec.mode);
    return values;
}

Rational oracle_max_truncated(const PrimeTable& table, Weight weight, Restriction restriction,
                              Mode mode, std::uint64_t n, std::uint64_t size_cutoff, long beta) {
    if (weight == Weight::norm && restriction == Restriction::all) {
        throw unsupported_error("reciprocal norm sums over the max-part ensemble diverge: "
                                "every partition 1^k has norm 1");
    }
    if (weight == Weight::supernorm && n > table.count()) (void)table.nth(n);
    Rational total = 0;
    for_each_partition_bounded(static_cast<Part>(n), size_cutoff, restriction,
                               [&](const Partition& lambda) {
                                   if (mode == Mode::individual && lambda.largest_part() != n) return;
                                   total += term(weight_of(table, weight, lambda), beta);
                               });
    return total;
}

}  // namespace supernorm
