#include "supernorm/genfun.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "supernorm/errors.hpp"
#include "supernorm/summation.hpp"

namespace supernorm {
namespace {

Part first_part(Restriction r) { return r == Restriction::no_ones ? 2 : 1; }

void check_caps(Ensemble ensemble, Backend backend, std::uint64_t nmax, const EvalOptions& options) {
    if (options.ignore_caps) return;
    std::uint64_t cap = 0;
    if (ensemble == Ensemble::size) {
        cap = backend == Backend::exact ? kExactSizeCap : kFloatSizeCap;
    } else {
        cap = backend == Backend::exact ? kExactPerimeterCap : kFloatPerimeterCap;
    }
    if (nmax > cap) {
        throw resource_error(std::string(backend == Backend::exact ? "exact" : "float") + " " +
                             std::string(name(ensemble)) + " series cap is nmax <= " +
                             std::to_string(cap) + " (requested " + std::to_string(nmax) + ")");
    }
}

void check_table(const PrimeTable& table, Weight weight, std::uint64_t nmax) {
    if (weight == Weight::supernorm && nmax > table.count()) (void)table.nth(nmax);
}

long require_integer_beta(double beta) {
    const auto b = integer_beta(beta);
    if (!b) throw unsupported_error("exact backend needs an integer beta, got " + std::to_string(beta));
    return *b;
}

BigInt base_weight(const PrimeTable& table, Weight weight, std::uint64_t k) {
    return weight == Weight::norm ? BigInt(static_cast<unsigned long>(k))
                                  : BigInt(static_cast<unsigned long>(table.nth(k)));
}

// w(k)^beta = base^-beta.
Rational exact_weight(const PrimeTable& table, Weight weight, std::uint64_t k, long beta) {
    return pow(Rational(base_weight(table, weight, k)), -beta);
}

double float_weight(const PrimeTable& table, Weight weight, std::uint64_t k, double beta) {
    const double base = weight == Weight::norm ? static_cast<double>(k)
                                               : static_cast<double>(table.nth(k));
    if (beta == 1.0) return 1.0 / base;
    return std::exp(-beta * std::log(base));
}

CoeffSeries make_series(Ensemble ensemble, Weight weight, Restriction restriction, double beta,
                        Mode mode, std::uint64_t nmax, Backend backend) {
    CoeffSeries s;
    s.spec = EnsembleSpec{ensemble, mode, restriction, weight, beta};
    s.nmax = nmax;
    s.backend = backend;
    return s;
}

// Euler-product coefficient extraction. Unbounded multiplicity runs the
// inner index upward so a part can be reused; distinct runs it downward.
template <class T, class WeightFn>
std::vector<T> size_dp(std::uint64_t nmax, Restriction restriction, WeightFn&& w) {
    std::vector<T> c(nmax + 1, T(0));
    c[0] = T(1);
    for (std::uint64_t k = first_part(restriction); k <= nmax; ++k) {
        const T wk = w(k);
        if (restriction == Restriction::distinct) {
            for (std::uint64_t s = nmax; s >= k; --s) c[s] += wk * c[s - k];
        } else {
            for (std::uint64_t s = k; s <= nmax; ++s) c[s] += wk * c[s - k];
        }
    }
    return c;
}

// Perimeter recurrence over the largest part m. t[r] holds T_{m}(r) (for
// multisets) after absorbing part m; for distinct parts the contribution
// of m is taken before m is absorbed so the extra parts stay below m.
template <class T, class Acc, class WeightFn>
std::vector<T> perimeter_dp(std::uint64_t nmax, Restriction restriction, WeightFn&& w) {
    std::vector<Acc> acc(nmax + 1);
    std::vector<T> t(nmax + 1, T(0));
    t[0] = T(1);
    const bool distinct = restriction == Restriction::distinct;
    for (std::uint64_t m = first_part(restriction); m <= nmax; ++m) {
        const T wm = w(m);
        if (distinct) {
            for (std::uint64_t r = 0; m + r <= nmax; ++r) acc[m + r] += wm * t[r];
            for (std::uint64_t r = nmax; r >= 1; --r) t[r] += wm * t[r - 1];
        } else {
            for (std::uint64_t r = 1; r <= nmax; ++r) t[r] += wm * t[r - 1];
            for (std::uint64_t r = 0; m + r <= nmax; ++r) acc[m + r] += wm * t[r];
        }
    }
    std::vector<T> out(nmax + 1, T(0));
    for (std::uint64_t n = 0; n <= nmax; ++n) {
        if constexpr (std::is_same_v<Acc, CompensatedSum>) {
            out[n] = acc[n].value();
        } else {
            out[n] = acc[n];
        }
    }
    return out;
}

}  // namespace

double CoeffSeries::value(std::uint64_t n) const {
    return backend == Backend::exact ? to_double(exact.at(n)) : approx.at(n);
}

CoeffSeries size_series(const PrimeTable& table, Weight weight, Restriction restriction, double beta,
                        std::uint64_t nmax, Backend backend, const EvalOptions& options) {
    check_caps(Ensemble::size, backend, nmax, options);
    check_table(table, weight, nmax);
    CoeffSeries s = make_series(Ensemble::size, weight, restriction, beta, Mode::individual, nmax, backend);
    if (backend == Backend::exact) {
        const long b = require_integer_beta(beta);
        s.exact = size_dp<Rational>(nmax, restriction,
                                    [&](std::uint64_t k) { return exact_weight(table, weight, k, b); });
    } else {
        s.approx = size_dp<double>(nmax, restriction,
                                   [&](std::uint64_t k) { return float_weight(table, weight, k, beta); });
    }
    return s;
}

CoeffSeries perimeter_series(const PrimeTable& table, Weight weight, Restriction restriction,
                             double beta, std::uint64_t nmax, Backend backend,
                             const EvalOptions& options) {
    check_caps(Ensemble::perimeter, backend, nmax, options);
    check_table(table, weight, nmax);
    CoeffSeries s =
        make_series(Ensemble::perimeter, weight, restriction, beta, Mode::individual, nmax, backend);
    if (backend == Backend::exact) {
        const long b = require_integer_beta(beta);
        s.exact = perimeter_dp<Rational, Rational>(
            nmax, restriction, [&](std::uint64_t k) { return exact_weight(table, weight, k, b); });
    } else {
        s.approx = perimeter_dp<double, CompensatedSum>(
            nmax, restriction, [&](std::uint64_t k) { return float_weight(table, weight, k, beta); });
    }
    return s;
}

CoeffSeries max_series(const PrimeTable& table, Weight weight, Restriction restriction, double beta,
                       Mode mode, std::uint64_t nmax, Backend backend) {
    const EnsembleSpec spec{Ensemble::max_part, mode, restriction, weight, beta};
    if (is_divergent(spec)) {
        throw unsupported_error("max-part sum " + describe(spec) +
                                " diverges (infinitely many terms of weight >= 1)");
    }
    check_table(table, weight, nmax);
    CoeffSeries s = make_series(Ensemble::max_part, weight, restriction, beta, mode, nmax, backend);
    const bool distinct = restriction == Restriction::distinct;
    const Part lo = first_part(restriction);
    // The cumulative product only changes at admissible parts; W(n) is its
    // increment C(n-1)(factor_n - 1), and 0 at inadmissible parts.
    if (backend == Backend::exact) {
        const long b = require_integer_beta(beta);
        std::vector<Rational> c(nmax + 1), w(nmax + 1);
        c[0] = 1;
        w[0] = 1;
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            if (n < lo) {
                c[n] = c[n - 1];
                w[n] = 0;
                continue;
            }
            const Rational wn = exact_weight(table, weight, n, b);
            const Rational factor = distinct ? Rational(1 + wn) : Rational(1 / (1 - wn));
            c[n] = c[n - 1] * factor;
            w[n] = c[n - 1] * (factor - 1);
        }
        s.exact = mode == Mode::cumulative ? std::move(c) : std::move(w);
    } else {
        std::vector<double> c(nmax + 1), w(nmax + 1);
        CompensatedSum log_c;
        c[0] = 1.0;
        w[0] = 1.0;
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            if (n < lo) {
                c[n] = c[n - 1];
                w[n] = 0.0;
                continue;
            }
            const double wn = float_weight(table, weight, n, beta);
            // factor - 1: wn for distinct, wn/(1 - wn) otherwise.
            const double excess = distinct ? wn : wn / (1.0 - wn);
            w[n] = c[n - 1] * excess;
            log_c.add(std::log1p(excess));
            c[n] = std::exp(log_c.value());
        }
        s.approx = mode == Mode::cumulative ? std::move(c) : std::move(w);
    }
    return s;
}

CoeffSeries cumulative(const CoeffSeries& series) {
    if (series.spec.mode != Mode::individual) {
        throw std::invalid_argument("series " + describe(series.spec) + " is already cumulative");
    }
    CoeffSeries out = series;
    out.spec.mode = Mode::cumulative;
    if (series.backend == Backend::exact) {
        out.exact[0] = 1;
        for (std::size_t n = 1; n < out.exact.size(); ++n) out.exact[n] = out.exact[n - 1] + series.exact[n];
    } else {
        CompensatedSum acc(1.0);
        out.approx[0] = 1.0;
        for (std::size_t n = 1; n < out.approx.size(); ++n) {
            acc.add(series.approx[n]);
            out.approx[n] = acc.value();
        }
    }
    return out;
}

std::string to_fixture(const CoeffSeries& series) {
    if (series.backend != Backend::exact) throw std::invalid_argument("fixtures hold exact series only");
    std::string out;
    for (std::size_t n = 0; n < series.exact.size(); ++n) {
        out += std::to_string(n) + ';' + to_string(series.exact[n]) + '\n';
    }
    return out;
}

std::vector<Rational> parse_fixture(std::string_view text) {
    std::vector<Rational> values;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        const auto semi = line.find(';');
        if (semi == std::string_view::npos) throw std::invalid_argument("fixture record without ';'");
        const std::string index(line.substr(0, semi));
        if (index.empty() || index.find_first_not_of("0123456789") != std::string::npos ||
            std::stoull(index) != values.size()) {
            throw std::invalid_argument("fixture record out of sequence: " + std::string(line));
        }
        values.push_back(parse_rational(line.substr(semi + 1)));
    }
    return values;
}

CoeffSeries difference(const CoeffSeries& series) {
    if (series.spec.mode != Mode::cumulative) {
        throw std::invalid_argument("series " + describe(series.spec) + " is not cumulative");
    }
    CoeffSeries out = series;
    out.spec.mode = Mode::individual;
    const int base = series.spec.ensemble == Ensemble::perimeter ? 0 : 1;
    if (series.backend == Backend::exact) {
        for (std::size_t n = 1; n < out.exact.size(); ++n) out.exact[n] = series.exact[n] - series.exact[n - 1];
        if (!out.exact.empty()) out.exact[0] = base;
    } else {
        for (std::size_t n = 1; n < out.approx.size(); ++n) out.approx[n] = series.approx[n] - series.approx[n - 1];
        if (!out.approx.empty()) out.approx[0] = base;
    }
    return out;
}

CoeffSeries evaluate(const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t nmax,
                     Backend backend, const EvalOptions& options) {
    if (spec.ensemble == Ensemble::max_part) {
        return max_series(table, spec.weight, spec.restriction, spec.beta, spec.mode, nmax, backend);
    }
    CoeffSeries s = spec.ensemble == Ensemble::size
                        ? size_series(table, spec.weight, spec.restriction, spec.beta, nmax, backend, options)
                        : perimeter_series(table, spec.weight, spec.restriction, spec.beta, nmax, backend,
                                           options);
    return spec.mode == Mode::cumulative ? cumulative(s) : s;
}

Rational max_supernorm_cumulative_exact(const PrimeTable& table, std::uint64_t n) {
    check_table(table, Weight::supernorm, n);
    BigInt num = 1, den = 1;
    for (std::uint64_t j = 1; j <= n; ++j) {
        const unsigned long p = static_cast<unsigned long>(table.nth(j));
        num *= p;
        den *= p - 1;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

double max_supernorm_cumulative(const PrimeTable& table, std::uint64_t n) {
    if (n == 0) return 1.0;
    return reciprocal_mertens_product(table, static_cast<double>(table.nth(n)));
}

Rational max_supernorm_individual_exact(const PrimeTable& table, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("max-part individual supernorm sum needs n >= 1");
    check_table(table, Weight::supernorm, n);
    return max_supernorm_cumulative_exact(table, n - 1) /
           Rational(BigInt(static_cast<unsigned long>(table.nth(n) - 1)));
}

double max_supernorm_individual(const PrimeTable& table, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("max-part individual supernorm sum needs n >= 1");
    check_table(table, Weight::supernorm, n);
    return max_supernorm_cumulative(table, n - 1) / static_cast<double>(table.nth(n) - 1);
}

Rational max_norm_star(std::uint64_t n, Mode mode) {
    // Partitions with parts in [2, m]: prod_{j=2}^m (1 - 1/j)^-1 = prod j/(j-1).
    auto cumulative_through = [](std::uint64_t m) {
        Rational c = 1;
        for (std::uint64_t j = 2; j <= m; ++j) {
            c *= Rational(BigInt(static_cast<unsigned long>(j)), BigInt(static_cast<unsigned long>(j - 1)));
        }
        return c;
    };
    if (mode == Mode::cumulative) return cumulative_through(n);
    if (n == 0) return 1;
    if (n == 1) return 0;
    // At least one part n: (1/n) prod_{j=2}^n j/(j-1).
    return cumulative_through(n) / Rational(BigInt(static_cast<unsigned long>(n)));
}

}  // namespace supernorm
