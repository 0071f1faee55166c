#include "supernorm/bounds.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "supernorm/constants.hpp"
#include "supernorm/summation.hpp"

namespace supernorm {

std::string summarize(const BoundReport& r, int precision) {
    std::ostringstream out;
    out.precision(precision);
    out << r.bound_name << " on [" << r.range.lo << ", " << r.range.hi << "]: " << (r.all_hold ? "holds" : "FAILS")
        << ", worst margin " << r.worst_margin << " at " << r.worst_at << " (" << r.points_checked << " points)";
    return out.str();
}

void BoundReport::record(std::uint64_t at, double margin) {
    if (points_checked == 0 || margin < worst_margin) {
        worst_margin = margin;
        worst_at = at;
    }
    ++points_checked;
    all_hold = worst_margin >= 0.0;
}

namespace {

BoundReport make_report(std::string name, IntRange range) {
    BoundReport r;
    r.bound_name = std::move(name);
    r.range = range;
    return r;
}

void note(const MarginObserver& observer, const BoundReport& r, std::uint64_t at, double margin) {
    if (observer) observer(r.bound_name, at, margin);
}

void check_order(IntRange range) {
    if (range.hi < range.lo) throw std::invalid_argument("empty range: hi < lo");
}

}  // namespace

std::vector<BoundReport> verify_prime_bounds(const PrimeTable& table, IntRange n_range,
                                             const MarginObserver& observer) {
    check_order(n_range);
    if (n_range.lo < 6) {
        throw std::invalid_argument("n-th prime estimates are only valid for n >= 6, got range start " +
                                    std::to_string(n_range.lo));
    }
    if (n_range.hi > table.count()) {
        throw std::out_of_range("n = " + std::to_string(n_range.hi) + " needs a sieve limit of at least " +
                                std::to_string(sieve_limit_for_index(n_range.hi)));
    }
    BoundReport bracket = make_report("nth_prime_bracket", n_range);
    BoundReport log_bracket = make_report("log_nth_prime_bracket", n_range);
    BoundReport loglog = make_report("loglog_nth_prime", n_range);

    for (std::uint64_t n = n_range.lo; n <= n_range.hi; ++n) {
        const double nd = static_cast<double>(n);
        const double p = static_cast<double>(table.nth(n));
        const double ln = std::log(nd);
        const double lln = std::log(ln);
        const double ratio = lln / ln;

        const double m1 = std::min(p - nd * ln, nd * (ln + lln) - p);
        bracket.record(n, m1);
        note(observer, bracket, n, m1);

        const double lp = std::log(p);
        const double m2 = std::min(lp - (ln + lln), ln + lln + ratio - lp);
        log_bracket.record(n, m2);
        note(observer, log_bracket, n, m2);

        const double m3 = 2.0 * ratio * ratio - std::abs(std::log(lp) - lln - ratio);
        loglog.record(n, m3);
        note(observer, loglog, n, m3);
    }
    return {bracket, log_bracket, loglog};
}

std::vector<BoundReport> verify_mertens_bounds(const PrimeTable& table, IntRange x_range,
                                               const MarginObserver& observer) {
    check_order(x_range);
    if (x_range.lo < kMertensThreshold) {
        throw std::invalid_argument("Mertens estimates need x >= " + std::to_string(kMertensThreshold) +
                                    ", got range start " + std::to_string(x_range.lo));
    }
    if (x_range.hi > table.limit()) {
        throw std::out_of_range("x = " + std::to_string(x_range.hi) + " exceeds the sieve limit " +
                                std::to_string(table.limit()));
    }
    const MathConstants& c = math_constants();
    BoundReport sum_report = make_report("reciprocal_prime_sum", x_range);
    BoundReport prod_report = make_report("mertens_product", x_range);
    BoundReport recip_report = make_report("reciprocal_mertens_product", x_range);

    // Running state for primes <= x.
    CompensatedSum inv_sum;
    CompensatedSum log_prod;
    const auto primes = table.primes();
    std::size_t i = 0;
    auto absorb_through = [&](std::uint64_t x) {
        for (; i < primes.size() && primes[i] <= x; ++i) {
            const double inv = 1.0 / static_cast<double>(primes[i]);
            inv_sum.add(inv);
            log_prod.add(std::log1p(-inv));
        }
    };

    // Evaluate all three deviations with the prime state fixed and log x = lx.
    auto check_at = [&](std::uint64_t at, double lx) {
        const double tol5 = 1.0 / (5.0 * lx * lx * lx);
        const double tol4 = 1.0 / (4.0 * lx * lx * lx);
        const double s = inv_sum.value();
        const double lp = log_prod.value();

        const double ms = tol5 - std::abs(s - std::log(lx) - c.mertens_m);
        sum_report.record(at, ms);
        note(observer, sum_report, at, ms);

        // P(x) e^gamma log x - 1 = expm1(log P + gamma + log log x).
        const double scaled = lp + c.gamma + std::log(lx);
        const double mp = tol5 - std::abs(std::expm1(scaled));
        prod_report.record(at, mp);
        note(observer, prod_report, at, mp);

        const double mr = tol4 - std::abs(std::expm1(-scaled));
        recip_report.record(at, mr);
        note(observer, recip_report, at, mr);
    };

    absorb_through(x_range.lo);
    std::uint64_t x = x_range.lo;
    while (true) {
        check_at(x, std::log(static_cast<double>(x)));
        // Right end of the current step: just below the next prime, or hi.
        const std::uint64_t next = i < primes.size() ? primes[i] : std::numeric_limits<std::uint64_t>::max();
        if (next > x_range.hi) {
            if (x_range.hi > x) check_at(x_range.hi, std::log(static_cast<double>(x_range.hi)));
            break;
        }
        // Left limit at the next prime: old sums, log x -> log(next).
        check_at(next - 1, std::log(static_cast<double>(next)));
        absorb_through(next);
        x = next;
    }
    return {sum_report, prod_report, recip_report};
}

BoundReport verify_log_prime_sum_bound(const PrimeTable& table, IntRange n_range,
                                       const MarginObserver& observer) {
    check_order(n_range);
    if (n_range.lo < 2) {
        throw std::invalid_argument("reciprocal log-prime sum bound holds for n >= 2, got range start " +
                                    std::to_string(n_range.lo));
    }
    if (n_range.hi > table.count()) {
        throw std::out_of_range("n = " + std::to_string(n_range.hi) + " needs a sieve limit of at least " +
                                std::to_string(sieve_limit_for_index(n_range.hi)));
    }
    BoundReport report = make_report("log_prime_reciprocal_sum", n_range);
    CompensatedSum s;
    for (std::uint64_t j = 1; j <= n_range.hi; ++j) {
        s.add(1.0 / std::log(static_cast<double>(table.nth(j))));
        if (j < n_range.lo) continue;
        const double nd = static_cast<double>(j);
        const double m = 3.0 * nd / std::log(nd) - s.value();
        report.record(j, m);
        note(observer, report, j, m);
    }
    return report;
}

}  // namespace supernorm
