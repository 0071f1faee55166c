#include "supernorm/primes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>

#include "supernorm/errors.hpp"
#include "supernorm/summation.hpp"

namespace supernorm {
namespace {

constexpr std::array<char, 8> kCacheMagic{'P', 'T', 'B', 'L', 'v', '0', '0', '1'};

// Above this many factors the direct product's n-ulp error budget is worse
// than the log-space route.
constexpr std::size_t kDirectProductMaxFactors = 1000;

std::vector<std::uint64_t> small_primes(std::uint64_t limit) {
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
}

std::uint64_t isqrt(std::uint64_t n) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void check_x(const PrimeTable& table, double x) {
    if (!(x >= 2.0)) throw std::invalid_argument("x must be >= 2");
    if (x > static_cast<double>(table.limit())) {
        throw std::out_of_range("x = " + std::to_string(x) + " exceeds the sieve limit " +
                                std::to_string(table.limit()));
    }
}

std::span<const std::uint64_t> primes_up_to(const PrimeTable& table, double x) {
    check_x(table, x);
    return table.primes().first(table.pi(static_cast<std::uint64_t>(std::floor(x))));
}

void write_u64(std::ostream& out, std::uint64_t v) {
    std::array<char, 8> bytes{};
    for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    out.write(bytes.data(), bytes.size());
}

bool read_u64(std::istream& in, std::uint64_t& v) {
    std::array<unsigned char, 8> bytes{};
    if (!in.read(reinterpret_cast<char*>(bytes.data()), bytes.size())) return false;
    v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
    return true;
}

}  // namespace

std::size_t prime_count_upper_estimate(std::uint64_t x) {
    if (x < 17) return 6;
    const double lx = std::log(static_cast<double>(x));
    // pi(x) < 1.25506 x / log x for x > 1 (Rosser-Schoenfeld).
    return static_cast<std::size_t>(1.25506 * static_cast<double>(x) / lx) + 1;
}

std::uint64_t sieve_limit_for_index(std::size_t n) {
    if (n < 6) return 13;
    const double ln = std::log(static_cast<double>(n));
    return static_cast<std::uint64_t>(std::ceil(static_cast<double>(n) * (ln + std::log(ln)))) + 1;
}

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveOptions& options) {
    if (limit < 2) throw std::invalid_argument("sieve limit must be >= 2");
    const std::size_t estimate = prime_count_upper_estimate(limit);
    const std::size_t needed = estimate * sizeof(std::uint64_t) + options.segment_bytes;
    if (needed > options.memory_budget_bytes) {
        throw resource_error("sieve limit " + std::to_string(limit) + " needs about " +
                             std::to_string(needed) + " bytes, over the memory budget of " +
                             std::to_string(options.memory_budget_bytes) + " bytes");
    }
    const std::size_t segment = std::max<std::size_t>(options.segment_bytes, 64);

    std::vector<std::uint64_t> primes;
    primes.reserve(estimate);
    primes.push_back(2);

    const std::uint64_t root = isqrt(limit);
    const std::vector<std::uint64_t> base = small_primes(root);

    // Segment k covers the odd numbers low + 2*i for i in [0, segment).
    std::vector<unsigned char> window(segment);
    // next[i]: next odd multiple of base[i] to strike, tracked across segments.
    std::vector<std::uint64_t> next;
    for (std::uint64_t p : base) {
        if (p != 2) next.push_back(p * p);
    }
    for (std::uint64_t low = 3; low <= limit; low += 2 * segment) {
        const std::uint64_t high = std::min<std::uint64_t>(limit, low + 2 * segment - 1);
        const std::size_t span = static_cast<std::size_t>((high - low) / 2 + 1);
        std::fill_n(window.begin(), span, 1);
        std::size_t k = 0;
        for (std::uint64_t p : base) {
            if (p == 2) continue;
            std::uint64_t m = next[k];
            for (; m <= high; m += 2 * p) window[(m - low) / 2] = 0;
            next[k++] = m;
        }
        for (std::size_t i = 0; i < span; ++i) {
            if (window[i]) primes.push_back(low + 2 * i);
        }
    }
    if (limit < 3) primes.resize(1);
    return PrimeTable(limit, std::move(primes));
}

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open prime cache " + path.string());
    std::array<char, 8> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kCacheMagic) {
        throw std::runtime_error("prime cache " + path.string() + " has a bad magic header");
    }
    std::uint64_t limit = 0;
    if (!read_u64(in, limit) || limit < 2) {
        throw std::runtime_error("prime cache " + path.string() + " has a bad limit field");
    }
    std::vector<std::uint64_t> primes;
    primes.reserve(prime_count_upper_estimate(limit));
    std::uint64_t p = 0;
    while (read_u64(in, p)) {
        if ((!primes.empty() && p <= primes.back()) || p > limit || p < 2) {
            throw std::runtime_error("prime cache " + path.string() +
                                     " is not strictly increasing within its limit");
        }
        primes.push_back(p);
    }
    if (in.gcount() != 0) {
        throw std::runtime_error("prime cache " + path.string() + " is truncated");
    }
    if (primes.empty() || primes.front() != 2) {
        throw std::runtime_error("prime cache " + path.string() + " does not start at 2");
    }
    return PrimeTable(limit, std::move(primes));
}

void PrimeTable::save(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write prime cache " + path.string());
    out.write(kCacheMagic.data(), kCacheMagic.size());
    write_u64(out, limit_);
    for (std::uint64_t p : primes_) write_u64(out, p);
    if (!out) throw std::runtime_error("failed writing prime cache " + path.string());
}

std::uint64_t PrimeTable::nth(std::size_t n) const {
    if (n == 0) return 1;
    if (n > primes_.size()) {
        throw std::out_of_range("p_" + std::to_string(n) + " is beyond the sieve (" +
                                std::to_string(primes_.size()) + " primes up to " +
                                std::to_string(limit_) + "); need a sieve limit of at least " +
                                std::to_string(sieve_limit_for_index(n)));
    }
    return primes_[n - 1];
}

bool PrimeTable::is_prime(std::uint64_t x) const {
    return std::binary_search(primes_.begin(), primes_.end(), x);
}

std::size_t PrimeTable::pi(std::uint64_t x) const {
    return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) -
                                    primes_.begin());
}

double reciprocal_prime_sum(const PrimeTable& table, double x) {
    CompensatedSum s;
    for (std::uint64_t p : primes_up_to(table, x)) s.add(1.0 / static_cast<double>(p));
    return s.value();
}

double mertens_product(const PrimeTable& table, double x) {
    const auto ps = primes_up_to(table, x);
    if (ps.size() <= kDirectProductMaxFactors) {
        double prod = 1.0;
        for (std::uint64_t p : ps) prod *= 1.0 - 1.0 / static_cast<double>(p);
        return prod;
    }
    CompensatedSum log_sum;
    for (std::uint64_t p : ps) log_sum.add(std::log1p(-1.0 / static_cast<double>(p)));
    return std::exp(log_sum.value());
}

double reciprocal_mertens_product(const PrimeTable& table, double x) {
    const auto ps = primes_up_to(table, x);
    if (ps.size() <= kDirectProductMaxFactors) {
        double prod = 1.0;
        for (std::uint64_t p : ps) {
            prod *= static_cast<double>(p) / static_cast<double>(p - 1);
        }
        return prod;
    }
    CompensatedSum log_sum;
    for (std::uint64_t p : ps) log_sum.add(-std::log1p(-1.0 / static_cast<double>(p)));
    return std::exp(log_sum.value());
}

Rational mertens_product_exact(const PrimeTable& table, double x) {
    BigInt num = 1;
    BigInt den = 1;
    for (std::uint64_t p : primes_up_to(table, x)) {
        num *= static_cast<unsigned long>(p - 1);
        den *= static_cast<unsigned long>(p);
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational reciprocal_mertens_product_exact(const PrimeTable& table, double x) {
    Rational r = mertens_product_exact(table, x);
    return 1 / r;
}

}  // namespace supernorm
