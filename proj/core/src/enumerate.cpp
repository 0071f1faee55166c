#include "supernorm/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace supernorm {

std::optional<long> integer_beta(double beta) {
    if (!std::isfinite(beta) || std::trunc(beta) != beta) return std::nullopt;
    if (std::abs(beta) > 1e9) return std::nullopt;
    return static_cast<long>(beta);
}

bool is_divergent(const EnsembleSpec& spec) {
    if (spec.ensemble != Ensemble::max_part) return false;
    if (spec.restriction == Restriction::distinct) return false;
    if (spec.weight == Weight::norm && spec.restriction == Restriction::all) return true;
    return !(spec.beta > 0.0);
}

std::string_view name(Ensemble e) {
    switch (e) {
        case Ensemble::size: return "size";
        case Ensemble::perimeter: return "perimeter";
        case Ensemble::max_part: return "max";
    }
    return "?";
}

std::string_view name(Mode m) { return m == Mode::individual ? "individual" : "cumulative"; }
std::string_view name(Weight w) { return w == Weight::norm ? "norm" : "supernorm"; }

std::string_view name(Restriction r) {
    switch (r) {
        case Restriction::all: return "all";
        case Restriction::no_ones: return "no-ones";
        case Restriction::distinct: return "distinct";
    }
    return "?";
}

std::string describe(const EnsembleSpec& spec) {
    std::string beta;
    if (auto b = integer_beta(spec.beta)) {
        beta = std::to_string(*b);
    } else {
        beta = std::to_string(spec.beta);
    }
    return std::string(name(spec.ensemble)) + "/" + std::string(name(spec.weight)) + "/" +
           std::string(name(spec.mode)) + "/" + std::string(name(spec.restriction)) + "/beta=" + beta;
}

std::optional<Ensemble> parse_ensemble(std::string_view s) {
    if (s == "size") return Ensemble::size;
    if (s == "perimeter" || s == "per") return Ensemble::perimeter;
    if (s == "max" || s == "max-part" || s == "max_part") return Ensemble::max_part;
    return std::nullopt;
}

std::optional<Mode> parse_mode(std::string_view s) {
    if (s == "individual") return Mode::individual;
    if (s == "cumulative") return Mode::cumulative;
    return std::nullopt;
}

std::optional<Weight> parse_weight(std::string_view s) {
    if (s == "norm") return Weight::norm;
    if (s == "supernorm") return Weight::supernorm;
    return std::nullopt;
}

std::optional<Restriction> parse_restriction(std::string_view s) {
    if (s == "all" || s == "none") return Restriction::all;
    if (s == "no-ones" || s == "no_ones" || s == "star") return Restriction::no_ones;
    if (s == "distinct") return Restriction::distinct;
    return std::nullopt;
}

std::vector<Partition> partitions_by_size(std::uint64_t n, Restriction restriction) {
    std::vector<Partition> out;
    for_each_partition_by_size(n, restriction, [&](const Partition& p) { out.push_back(p); });
    return out;
}

std::vector<Partition> partitions_by_perimeter(std::uint64_t n, Restriction restriction) {
    std::vector<Partition> out;
    for_each_partition_by_perimeter(n, restriction, [&](const Partition& p) { out.push_back(p); });
    return out;
}

BigInt partition_count(std::uint64_t n) {
    std::vector<BigInt> p(n + 1);
    p[0] = 1;
    for (std::uint64_t m = 1; m <= n; ++m) {
        BigInt acc = 0;
        // Generalized pentagonal numbers k(3k-1)/2 and k(3k+1)/2, signs + + - - ...
        for (std::uint64_t k = 1;; ++k) {
            const std::uint64_t g1 = k * (3 * k - 1) / 2;
            if (g1 > m) break;
            const bool plus = (k % 2) == 1;
            if (plus) acc += p[m - g1]; else acc -= p[m - g1];
            const std::uint64_t g2 = k * (3 * k + 1) / 2;
            if (g2 <= m) {
                if (plus) acc += p[m - g2]; else acc -= p[m - g2];
            }
        }
        p[m] = acc;
    }
    return p[n];
}

namespace {

BigInt count_individual(const EnsembleSpec& spec, std::uint64_t n) {
    if (spec.ensemble == Ensemble::size && spec.restriction == Restriction::all) {
        return partition_count(n);
    }
    BigInt c = 0;
    auto tally = [&](const Partition&) { ++c; };
    if (spec.ensemble == Ensemble::size) {
        for_each_partition_by_size(n, spec.restriction, tally);
    } else {
        for_each_partition_by_perimeter(n, spec.restriction, tally);
    }
    return c;
}

}  // namespace

std::optional<BigInt> ensemble_count(const EnsembleSpec& spec, std::uint64_t n) {
    if (spec.ensemble == Ensemble::max_part) {
        // Max(0) = {empty}; Max(n) has 2^(n-1) distinct-part members and is
        // infinite otherwise, except that no-ones Max(1) is empty.
        if (spec.restriction == Restriction::distinct) {
            if (spec.mode == Mode::cumulative) return pow(BigInt(2), static_cast<unsigned long>(n));
            return n == 0 ? BigInt(1) : pow(BigInt(2), static_cast<unsigned long>(n - 1));
        }
        if (n == 0) return BigInt(1);
        if (spec.restriction == Restriction::no_ones && n == 1) {
            return spec.mode == Mode::cumulative ? BigInt(1) : BigInt(0);
        }
        return std::nullopt;
    }
    if (spec.mode == Mode::individual) return count_individual(spec, n);
    // Cumulative ensembles contain the empty partition exactly once.
    BigInt total = 1;
    for (std::uint64_t k = 1; k <= n; ++k) total += count_individual(spec, k);
    return total;
}

}  // namespace supernorm
