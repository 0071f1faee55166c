#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "supernorm/ensemble.hpp"
#include "supernorm/primes.hpp"
#include "supernorm/rational.hpp"

namespace supernorm {

enum class Backend { exact, floating };

// Default caps; exact denominators grow superpolynomially in n.
inline constexpr std::uint64_t kExactSizeCap = 120;
inline constexpr std::uint64_t kExactPerimeterCap = 80;
inline constexpr std::uint64_t kFloatSizeCap = 100'000;
inline constexpr std::uint64_t kFloatPerimeterCap = 5'000;

struct EvalOptions {
    bool ignore_caps = false;
};

// Values of one statistic for n = 0..nmax. Exactly one of `exact` and
// `approx` is filled, according to `backend`.
struct CoeffSeries {
    EnsembleSpec spec;
    std::uint64_t nmax = 0;
    Backend backend = Backend::exact;
    std::vector<Rational> exact;
    std::vector<double> approx;

    double value(std::uint64_t n) const;
    std::size_t length() const { return backend == Backend::exact ? exact.size() : approx.size(); }
};

// Individual-mode size-ensemble series, read off the product
//   prod_k (1 - x^k w(k)^beta)^-1   (all, no-ones: k >= 2)
//   prod_k (1 + x^k w(k)^beta)      (distinct)
// with w(k) = 1/k (norm) or 1/p_k (supernorm).
CoeffSeries size_series(const PrimeTable& table, Weight weight, Restriction restriction, double beta,
                        std::uint64_t nmax, Backend backend, const EvalOptions& options = {});

// Individual-mode perimeter-ensemble series:
//   W(n) = sum_{m} w(m)^beta T_m(n - m)
// where T_m(r) is the weighted count of r-element multisets (sets, when
// distinct: parts < m) of admissible parts <= m.
CoeffSeries perimeter_series(const PrimeTable& table, Weight weight, Restriction restriction,
                             double beta, std::uint64_t nmax, Backend backend,
                             const EvalOptions& options = {});

// Max-part series from the closed-form products over parts j <= n:
//   C(n) = prod_j 1/(1 - w(j)^beta), or prod_j (1 + w(j)^beta) for distinct;
//   W(n) = C(n-1) (factor_n - 1).
// Divergent specs are rejected.
CoeffSeries max_series(const PrimeTable& table, Weight weight, Restriction restriction, double beta,
                       Mode mode, std::uint64_t nmax, Backend backend);

// C(0) = 1 and C(n) = 1 + sum_{m=1}^n W(m): the empty partition once, then
// every individual ensemble from n = 1.
CoeffSeries cumulative(const CoeffSeries& series);
// Inverse of cumulative(): W(n) = C(n) - C(n-1), W(0) the ensemble base
// case (1 for size and max-part, 0 for perimeter).
CoeffSeries difference(const CoeffSeries& series);

// Regression fixture text: one "n;numerator/denominator" record per line,
// n ascending from 0. Exact backend only.
std::string to_fixture(const CoeffSeries& series);
// Parses fixture text; blank lines are skipped, records must be contiguous
// from n = 0.
std::vector<Rational> parse_fixture(std::string_view text);

// Dispatch on spec.ensemble and spec.mode.
CoeffSeries evaluate(const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t nmax,
                     Backend backend, const EvalOptions& options = {});

// Chat_max(n) = prod_{j<=n} p_j/(p_j - 1).
Rational max_supernorm_cumulative_exact(const PrimeTable& table, std::uint64_t n);
double max_supernorm_cumulative(const PrimeTable& table, std::uint64_t n);
// What_max(n) = Chat_max(n-1) / (p_n - 1).
Rational max_supernorm_individual_exact(const PrimeTable& table, std::uint64_t n);
double max_supernorm_individual(const PrimeTable& table, std::uint64_t n);

// No-ones max-part norm sums: W*(1) = 0 and W*(n) = 1 otherwise; C*(n) = n
// for n >= 1 and C*(0) = 1. Evaluated from the telescoping product
// (1/n) prod_{j=2}^n j/(j-1), not from the closed form.
Rational max_norm_star(std::uint64_t n, Mode mode);

}  // namespace supernorm
