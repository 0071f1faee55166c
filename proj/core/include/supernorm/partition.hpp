#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "supernorm/primes.hpp"
#include "supernorm/rational.hpp"

namespace supernorm {

using Part = std::uint32_t;

struct PartMultiplicity {
    Part part;
    std::uint32_t multiplicity;
    friend bool operator==(const PartMultiplicity&, const PartMultiplicity&) = default;
};

// A finite multiset of positive parts, kept in multiplicity form: distinct
// parts in decreasing order, every multiplicity >= 1. The empty partition
// is the empty list.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<Part> parts) : Partition(from_parts(parts)) {}

    // Parts in any order; zero parts are rejected.
    static Partition from_parts(std::span<const Part> parts);
    // (part, multiplicity) pairs in any order; repeated parts are merged and
    // zero multiplicities dropped.
    static Partition from_multiplicities(std::span<const PartMultiplicity> entries);

    std::span<const PartMultiplicity> entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    std::uint32_t multiplicity(Part j) const;
    // Nonincreasing part list lambda_1 >= ... >= lambda_r.
    std::vector<Part> parts() const;

    std::uint64_t size() const;
    std::uint64_t length() const;
    // 0 for the empty partition.
    Part largest_part() const { return entries_.empty() ? 0 : entries_.front().part; }
    // lambda_1 + r - 1, and 1 for the empty partition by convention.
    std::uint64_t perimeter() const;

    // Multiset union.
    Partition merged(const Partition& other) const;
    Partition with_ones(std::uint32_t k) const;

    // Appending is only valid for a part no larger than the current smallest;
    // enumerators use these to grow and shrink a partition in place.
    void push_smallest(Part part);
    void pop_smallest();

    friend bool operator==(const Partition&, const Partition&) = default;
    // Reverse-lexicographic order on part lists: a < b when a comes first.
    friend bool reverse_lex_less(const Partition& a, const Partition& b);

private:
    std::vector<PartMultiplicity> entries_;
};

bool reverse_lex_less(const Partition& a, const Partition& b);

enum class Restriction { all, no_ones, distinct };

bool admits(Restriction restriction, const Partition& lambda);

// Product of parts; 1 for the empty partition.
BigInt norm(const Partition& lambda);
// Product of p_{part} over parts; 1 for the empty partition.
BigInt supernorm(const PrimeTable& table, const Partition& lambda);

enum class AdditiveStat { size, length, largest_part };
std::uint64_t additive_stat(const Partition& lambda, AdditiveStat which);

// "[3,2,1,1]" and "[]".
std::string to_string(const Partition& lambda);
// Rejects zero parts, increasing runs, and anything that is not a bracketed
// comma-separated list of decimal integers.
Partition parse_partition(std::string_view text);

}  // namespace supernorm
