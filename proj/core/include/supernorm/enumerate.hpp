#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "supernorm/ensemble.hpp"
#include "supernorm/partition.hpp"
#include "supernorm/primes.hpp"

namespace supernorm {

// Enumerators call visit(const Partition&) once per partition in
// reverse-lexicographic order. The reference is only valid during the call.

namespace detail {

// Extend lambda by `count` more parts from [lo, hi] (parts no larger than
// the current smallest), distinct forbidding repeats.
template <class Visit>
void extend_by_count(Partition& lambda, std::uint64_t count, Part lo, Part hi, bool distinct,
                     Visit& visit) {
    if (count == 0) {
        visit(static_cast<const Partition&>(lambda));
        return;
    }
    if (hi < lo) return;
    if (distinct && hi - lo + 1 < count) return;
    for (Part k = hi; k >= lo; --k) {
        lambda.push_smallest(k);
        extend_by_count(lambda, count - 1, lo, distinct ? k - 1 : k, distinct, visit);
        lambda.pop_smallest();
        if (k == lo) break;
    }
}

// Extend lambda by parts from [lo, hi] summing to exactly `remaining`.
template <class Visit>
void extend_by_sum(Partition& lambda, std::uint64_t remaining, Part lo, Part hi, bool distinct,
                   Visit& visit) {
    if (remaining == 0) {
        visit(static_cast<const Partition&>(lambda));
        return;
    }
    const Part top = static_cast<Part>(std::min<std::uint64_t>(hi, remaining));
    if (top < lo) return;
    for (Part k = top; k >= lo; --k) {
        lambda.push_smallest(k);
        extend_by_sum(lambda, remaining - k, lo, distinct ? k - 1 : k, distinct, visit);
        lambda.pop_smallest();
        if (k == lo) break;
    }
}

inline Part min_part(Restriction r) { return r == Restriction::no_ones ? 2 : 1; }

}  // namespace detail

// Partitions of size n admitted by the restriction; n = 0 yields the empty
// partition.
template <class Visit>
void for_each_partition_by_size(std::uint64_t n, Restriction restriction, Visit&& visit) {
    Partition lambda;
    const Part hi = static_cast<Part>(n);
    detail::extend_by_sum(lambda, n, detail::min_part(restriction), hi,
                          restriction == Restriction::distinct, visit);
}

// Nonempty partitions of perimeter n: largest part m, then n - m further
// parts from [1, m] (from [1, m-1] when distinct).
template <class Visit>
void for_each_partition_by_perimeter(std::uint64_t n, Restriction restriction, Visit&& visit) {
    if (n == 0) return;
    const Part lo = detail::min_part(restriction);
    const bool distinct = restriction == Restriction::distinct;
    Partition lambda;
    for (Part m = static_cast<Part>(n); m >= lo; --m) {
        lambda.push_smallest(m);
        detail::extend_by_count(lambda, n - m, lo, distinct ? m - 1 : m, distinct, visit);
        lambda.pop_smallest();
        if (m == lo) break;
    }
}

// Partitions with all parts <= max_part and size <= size_cutoff, grouped by
// size ascending.
template <class Visit>
void for_each_partition_bounded(Part max_part, std::uint64_t size_cutoff, Restriction restriction,
                                Visit&& visit) {
    const Part lo = detail::min_part(restriction);
    const bool distinct = restriction == Restriction::distinct;
    for (std::uint64_t s = 0; s <= size_cutoff; ++s) {
        Partition lambda;
        detail::extend_by_sum(lambda, s, lo, max_part, distinct, visit);
    }
}

namespace detail {

template <class Visit>
void extend_by_supernorm(const PrimeTable& table, Partition& lambda, std::uint64_t budget,
                         std::size_t max_index, Visit& visit) {
    visit(static_cast<const Partition&>(lambda));
    for (std::size_t k = std::min(max_index, table.pi(budget)); k >= 1; --k) {
        const std::uint64_t p = table.nth(k);
        lambda.push_smallest(static_cast<Part>(k));
        extend_by_supernorm(table, lambda, budget / p, k, visit);
        lambda.pop_smallest();
    }
}

}  // namespace detail

// Every partition with supernorm <= bound, each exactly once (the supernorm
// is a bijection onto the positive integers). The table must cover all
// primes <= bound.
template <class Visit>
void for_each_partition_by_supernorm_bound(const PrimeTable& table, std::uint64_t bound,
                                           Visit&& visit) {
    if (bound < 1) throw std::invalid_argument("supernorm bound must be >= 1");
    if (bound > table.limit()) {
        throw std::out_of_range("supernorm bound " + std::to_string(bound) +
                                " needs a sieve limit of at least " + std::to_string(bound));
    }
    Partition lambda;
    detail::extend_by_supernorm(table, lambda, bound, table.pi(bound), visit);
}

std::vector<Partition> partitions_by_size(std::uint64_t n, Restriction restriction);
std::vector<Partition> partitions_by_perimeter(std::uint64_t n, Restriction restriction);

// p(n) by Euler's pentagonal number recurrence.
BigInt partition_count(std::uint64_t n);

// Cardinality of the individual ensemble at n, or nullopt when the set is
// infinite (max-part ensembles other than distinct parts, n >= 1).
std::optional<BigInt> ensemble_count(const EnsembleSpec& spec, std::uint64_t n);

}  // namespace supernorm
