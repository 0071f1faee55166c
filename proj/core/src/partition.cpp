#include "supernorm/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace supernorm {

Partition Partition::from_parts(std::span<const Part> parts) {
    std::map<Part, std::uint32_t, std::greater<>> counts;
    for (Part p : parts) {
        if (p == 0) throw std::invalid_argument("partition parts must be positive");
        ++counts[p];
    }
    Partition out;
    for (const auto& [part, m] : counts) out.entries_.push_back({part, m});
    return out;
}

Partition Partition::from_multiplicities(std::span<const PartMultiplicity> entries) {
    std::map<Part, std::uint32_t, std::greater<>> counts;
    for (const auto& e : entries) {
        if (e.part == 0) throw std::invalid_argument("partition parts must be positive");
        if (e.multiplicity > 0) counts[e.part] += e.multiplicity;
    }
    Partition out;
    for (const auto& [part, m] : counts) out.entries_.push_back({part, m});
    return out;
}

std::uint32_t Partition::multiplicity(Part j) const {
    for (const auto& e : entries_) {
        if (e.part == j) return e.multiplicity;
    }
    return 0;
}

std::vector<Part> Partition::parts() const {
    std::vector<Part> out;
    out.reserve(length());
    for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.part);
    return out;
}

std::uint64_t Partition::size() const {
    std::uint64_t s = 0;
    for (const auto& e : entries_) s += static_cast<std::uint64_t>(e.part) * e.multiplicity;
    return s;
}

std::uint64_t Partition::length() const {
    std::uint64_t r = 0;
    for (const auto& e : entries_) r += e.multiplicity;
    return r;
}

std::uint64_t Partition::perimeter() const {
    if (entries_.empty()) return 1;
    return largest_part() + length() - 1;
}

Partition Partition::merged(const Partition& other) const {
    std::vector<PartMultiplicity> all(entries_.begin(), entries_.end());
    all.insert(all.end(), other.entries_.begin(), other.entries_.end());
    return from_multiplicities(all);
}

Partition Partition::with_ones(std::uint32_t k) const {
    if (k == 0) return *this;
    Partition out = *this;
    if (!out.entries_.empty() && out.entries_.back().part == 1) {
        out.entries_.back().multiplicity += k;
    } else {
        out.entries_.push_back({1, k});
    }
    return out;
}

void Partition::push_smallest(Part part) {
    if (!entries_.empty() && entries_.back().part == part) {
        ++entries_.back().multiplicity;
    } else {
        entries_.push_back({part, 1});
    }
}

void Partition::pop_smallest() {
    if (--entries_.back().multiplicity == 0) entries_.pop_back();
}

bool reverse_lex_less(const Partition& a, const Partition& b) {
    const auto pa = a.parts();
    const auto pb = b.parts();
    return std::lexicographical_compare(pb.begin(), pb.end(), pa.begin(), pa.end());
}

bool admits(Restriction restriction, const Partition& lambda) {
    switch (restriction) {
        case Restriction::all:
            return true;
        case Restriction::no_ones:
            return lambda.multiplicity(1) == 0;
        case Restriction::distinct:
            return std::all_of(lambda.entries().begin(), lambda.entries().end(),
                               [](const PartMultiplicity& e) { return e.multiplicity <= 1; });
    }
    return false;
}

BigInt norm(const Partition& lambda) {
    BigInt n = 1;
    for (const auto& e : lambda.entries()) n *= pow(BigInt(e.part), e.multiplicity);
    return n;
}

BigInt supernorm(const PrimeTable& table, const Partition& lambda) {
    BigInt n = 1;
    for (const auto& e : lambda.entries()) {
        n *= pow(BigInt(static_cast<unsigned long>(table.nth(e.part))), e.multiplicity);
    }
    return n;
}

std::uint64_t additive_stat(const Partition& lambda, AdditiveStat which) {
    switch (which) {
        case AdditiveStat::size:
            return lambda.size();
        case AdditiveStat::length:
            return lambda.length();
        case AdditiveStat::largest_part:
            return lambda.largest_part();
    }
    return 0;
}

std::string to_string(const Partition& lambda) {
    std::string out = "[";
    bool first = true;
    for (Part p : lambda.parts()) {
        if (!first) out += ',';
        out += std::to_string(p);
        first = false;
    }
    out += ']';
    return out;
}

Partition parse_partition(std::string_view text) {
    auto fail = [&](const std::string& why) -> Partition {
        throw std::invalid_argument("bad partition \"" + std::string(text) + "\": " + why);
    };
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        return fail("expected a bracketed list such as [3,2,1]");
    }
    std::string_view body = text.substr(1, text.size() - 2);
    std::vector<Part> parts;
    if (body.empty()) return Partition{};
    while (true) {
        const auto comma = body.find(',');
        const std::string_view token = body.substr(0, comma);
        Part value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
            return fail("part \"" + std::string(token) + "\" is not a decimal integer");
        }
        if (value == 0) return fail("zero part");
        if (!parts.empty() && value > parts.back()) return fail("parts must be nonincreasing");
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
    }
    return Partition::from_parts(parts);
}

}  // namespace supernorm
