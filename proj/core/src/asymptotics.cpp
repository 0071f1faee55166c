#include "supernorm/asymptotics.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "supernorm/summation.hpp"

namespace supernorm {

std::string_view name(AsymptoticModel model) {
    switch (model) {
        case AsymptoticModel::lehmer_linear: return "lehmer_linear";
        case AsymptoticModel::lehmer_const: return "lehmer_const";
        case AsymptoticModel::log: return "log";
        case AsymptoticModel::log_loglog: return "log_loglog";
        case AsymptoticModel::inv: return "inv";
        case AsymptoticModel::unit: return "unit";
        case AsymptoticModel::ident: return "ident";
    }
    return "?";
}

std::uint64_t domain_start(AsymptoticModel model) {
    return model == AsymptoticModel::log_loglog ? 2 : 1;
}

double predictor(const MathConstants& c, AsymptoticModel model, std::uint64_t n) {
    if (n < domain_start(model)) {
        throw std::domain_error(std::string(name(model)) + " is undefined at n = " + std::to_string(n));
    }
    const double x = static_cast<double>(n);
    switch (model) {
        case AsymptoticModel::lehmer_linear: return c.e_neg_gamma * x;
        case AsymptoticModel::lehmer_const: return c.e_neg_gamma;
        case AsymptoticModel::log: return c.e_gamma * std::log(x);
        case AsymptoticModel::log_loglog: return c.e_gamma * (std::log(x) + std::log(std::log(x)));
        case AsymptoticModel::inv: return c.e_gamma / x;
        case AsymptoticModel::unit: return 1.0;
        case AsymptoticModel::ident: return x;
    }
    return 0.0;
}

ResidualReport residual_report(const CoeffSeries& series, AsymptoticModel model, IntRange n_range) {
    if (n_range.hi < n_range.lo) throw std::invalid_argument("empty range");
    if (n_range.hi >= series.length()) {
        throw std::invalid_argument("range end " + std::to_string(n_range.hi) + " exceeds series nmax " +
                                    std::to_string(series.nmax));
    }
    ResidualReport report{describe(series.spec), series.spec, model, {}};
    const MathConstants& c = math_constants();
    for (std::uint64_t n = n_range.lo; n <= n_range.hi; ++n) {
        const double v = series.value(n);
        const double p = predictor(c, model, n);
        report.rows.push_back({n, v, p, v - p, v / p});
    }
    return report;
}

std::string summarize(const ResidualReport& report, int precision) {
    std::ostringstream out;
    out.precision(precision);
    out << report.label << " against " << name(report.model) << '\n';
    const int w = precision + 8;
    out << std::setw(6) << "n" << std::setw(w) << "value" << std::setw(w) << "prediction" << std::setw(w) << "residual"
        << std::setw(w) << "ratio" << '\n';
    for (const auto& row : report.rows) {
        out << std::setw(6) << row.n << std::setw(w) << row.value << std::setw(w) << row.prediction << std::setw(w)
            << row.residual << std::setw(w) << row.ratio << '\n';
    }
    return out.str();
}

namespace {

struct Tracker {
    BoundReport report;
    explicit Tracker(std::string name, IntRange range) {
        report.bound_name = std::move(name);
        report.range = range;
    }
};

bool same_value(const CoeffSeries& a, const CoeffSeries& b, std::uint64_t n) {
    if (a.backend == Backend::exact && b.backend == Backend::exact) return a.exact[n] == b.exact[n];
    const double x = a.value(n);
    const double y = b.value(n);
    return std::abs(x - y) <= 1e-12 * std::max(std::abs(x), std::abs(y));
}

int compare(const CoeffSeries& a, std::uint64_t na, const CoeffSeries& b, std::uint64_t nb) {
    if (a.backend == Backend::exact && b.backend == Backend::exact) {
        return cmp(a.exact[na], b.exact[nb]);
    }
    const double x = a.value(na);
    const double y = b.value(nb);
    return (x > y) - (x < y);
}

}  // namespace

InequalitySuite inequality_suite(const PrimeTable& table, std::uint64_t nmax, Backend backend) {
    InequalitySuite suite;
    const IntRange range{1, nmax};
    const auto individual = [&](Ensemble e, Weight w, Restriction r) {
        return evaluate(table, EnsembleSpec{e, Mode::individual, r, w, 1.0}, nmax, backend);
    };
    const auto cumulative_of = [&](Ensemble e, Weight w, Restriction r) {
        return evaluate(table, EnsembleSpec{e, Mode::cumulative, r, w, 1.0}, nmax, backend);
    };

    const CoeffSeries c_size = cumulative_of(Ensemble::size, Weight::supernorm, Restriction::all);
    const CoeffSeries c_per = cumulative_of(Ensemble::perimeter, Weight::supernorm, Restriction::all);
    const CoeffSeries c_max = cumulative_of(Ensemble::max_part, Weight::supernorm, Restriction::all);

    Tracker chain("cumulative_chain", range);
    std::uint64_t last_non_strict = 0;
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const int left = compare(c_size, n, c_per, n);
        const int right = compare(c_per, n, c_max, n);
        ChainRow row{n, left <= 0 && right <= 0, left < 0, right < 0};
        suite.chain.push_back(row);
        if (!(row.strict_size_per && row.strict_per_max)) last_non_strict = n;
        // Margin: the smaller of the two gaps, in value units.
        const double margin = std::min(c_per.value(n) - c_size.value(n), c_max.value(n) - c_per.value(n));
        chain.report.record(n, row.holds ? std::max(margin, 0.0) : std::min(margin, -1e-300));
    }
    suite.strict_from = last_non_strict + 1;
    suite.reports.push_back(chain.report);

    // Norm identities: removing every part 1 maps Size(n) onto no-ones
    // partitions of size <= n, and Per(n) onto no-ones partitions of
    // perimeter <= n (the all-ones partition going to the empty one).
    const CoeffSeries w_size = individual(Ensemble::size, Weight::norm, Restriction::all);
    const CoeffSeries c_size_star = cumulative_of(Ensemble::size, Weight::norm, Restriction::no_ones);
    const CoeffSeries w_per = individual(Ensemble::perimeter, Weight::norm, Restriction::all);
    const CoeffSeries c_per_star = cumulative_of(Ensemble::perimeter, Weight::norm, Restriction::no_ones);

    Tracker size_identity("size_norm_identity", range);
    Tracker per_identity("perimeter_norm_identity", range);
    Tracker per_bound("perimeter_norm_linear_bound", range);
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        size_identity.report.record(n, same_value(w_size, c_size_star, n) ? 0.0 : -1.0);
        per_identity.report.record(n, same_value(w_per, c_per_star, n) ? 0.0 : -1.0);
        const double slack = static_cast<double>(n) - w_per.value(n);
        if (backend == Backend::exact) {
            const int c = cmp(w_per.exact[n], Rational(BigInt(static_cast<unsigned long>(n))));
            per_bound.report.record(n, c <= 0 ? std::max(slack, 0.0) : std::min(slack, -1e-300));
        } else {
            per_bound.report.record(n, slack);
        }
    }
    suite.reports.push_back(size_identity.report);
    suite.reports.push_back(per_identity.report);
    suite.reports.push_back(per_bound.report);

    if (nmax >= 14) {
        const CoeffSeries ws = individual(Ensemble::size, Weight::supernorm, Restriction::all);
        const CoeffSeries wp = individual(Ensemble::perimeter, Weight::supernorm, Restriction::all);
        Tracker witness("size_vs_perimeter_witness", IntRange{14, 14});
        suite.witness_size = ws.value(14);
        suite.witness_perimeter = wp.value(14);
        const bool exceeds = compare(ws, 14, wp, 14) > 0;
        const double gap = suite.witness_size - suite.witness_perimeter;
        witness.report.record(14, exceeds ? std::max(gap, 0.0) : std::min(gap, -1e-300));
        suite.reports.push_back(witness.report);
    }
    return suite;
}

std::vector<ResidualReport> conjecture_report(const PrimeTable& table, std::uint64_t nmax) {
    const MathConstants& c = math_constants();
    const auto ws = evaluate(table, {Ensemble::size, Mode::individual, Restriction::all, Weight::supernorm, 1.0},
                             nmax, Backend::floating);
    const auto wp = evaluate(table,
                             {Ensemble::perimeter, Mode::individual, Restriction::all, Weight::supernorm, 1.0},
                             nmax, Backend::floating);
    const auto wn = evaluate(table, {Ensemble::size, Mode::individual, Restriction::all, Weight::norm, 1.0},
                             nmax, Backend::floating);
    std::vector<ResidualReport> out;
    auto scaled = [&](std::string label, EnsembleSpec spec, auto value_at) {
        ResidualReport r{std::move(label), spec, AsymptoticModel::inv, {}};
        for (std::uint64_t n = 1; n <= nmax; ++n) {
            const double v = value_at(n);
            const double p = predictor(c, AsymptoticModel::inv, n);
            r.rows.push_back({n, v, p, v - p, v / p});
        }
        out.push_back(std::move(r));
    };
    scaled("size_supernorm", ws.spec, [&](std::uint64_t n) { return ws.value(n); });
    scaled("perimeter_supernorm", wp.spec, [&](std::uint64_t n) { return wp.value(n); });
    scaled("max_supernorm",
           EnsembleSpec{Ensemble::max_part, Mode::individual, Restriction::all, Weight::supernorm, 1.0},
           [&](std::uint64_t n) { return max_supernorm_individual(table, n); });

    ResidualReport product{"size_norm_times_supernorm", wn.spec, AsymptoticModel::unit, {}};
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        const double v = wn.value(n) * ws.value(n);
        product.rows.push_back({n, v, 1.0, v - 1.0, v});
    }
    out.push_back(std::move(product));
    return out;
}

std::vector<ParityRow> no_ones_parity(const PrimeTable& table, std::uint64_t kmax) {
    const auto w = size_series(table, Weight::norm, Restriction::no_ones, 1.0, 2 * kmax + 1, Backend::exact);
    std::vector<ParityRow> rows;
    for (std::uint64_t k = 1; k <= kmax; ++k) {
        rows.push_back({k, w.value(2 * k), w.value(2 * k + 1), w.exact[2 * k + 1] < w.exact[2 * k]});
    }
    return rows;
}

BoundReport mertens_window_check(const PrimeTable& table, IntRange n_range, const MarginObserver& observer) {
    if (n_range.hi < n_range.lo) throw std::invalid_argument("empty range: hi < lo");
    if (n_range.hi > table.count()) {
        throw std::out_of_range("n = " + std::to_string(n_range.hi) + " needs a sieve limit of at least " +
                                std::to_string(sieve_limit_for_index(n_range.hi)));
    }
    if (n_range.lo == 0 || table.nth(n_range.lo) < kMertensThreshold) {
        throw std::invalid_argument("the max-part window needs p_n >= " + std::to_string(kMertensThreshold) +
                                    "; range start n = " + std::to_string(n_range.lo) +
                                    " has p_n = " + std::to_string(table.nth(n_range.lo)));
    }
    const MathConstants& c = math_constants();
    BoundReport report;
    report.bound_name = "max_cumulative_window";
    report.range = n_range;
    CompensatedSum log_c;
    for (std::uint64_t j = 1; j <= n_range.hi; ++j) {
        log_c.add(-std::log1p(-1.0 / static_cast<double>(table.nth(j))));
        if (j < n_range.lo) continue;
        const double ln = std::log(static_cast<double>(j));
        const double lln = std::log(ln);
        const double residual = std::exp(log_c.value()) - c.e_gamma * (ln + lln);
        const double margin = std::min(residual + 1.0 / (ln * ln), 2.0 * lln / ln - residual);
        report.record(j, margin);
        if (observer) observer(report.bound_name, j, margin);
    }
    return report;
}

}  // namespace supernorm
