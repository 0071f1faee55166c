#include "supernorm_cli/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "supernorm/asymptotics.hpp"
#include "supernorm/bounds.hpp"
#include "supernorm/errors.hpp"
#include "supernorm/oracle.hpp"
#include "supernorm/verification.hpp"
#include "supernorm_cli/figures.hpp"

namespace supernorm::cli {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

// Rejected before any computation; exit code 2.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string ensemble = "size";
    std::string weight = "supernorm";
    std::string mode = "individual";
    std::string restriction = "all";
    double beta = 1.0;
    std::uint64_t nmax = 20;
    std::string backend = "exact";
    std::uint64_t sieve_limit = 0;  // 0: command default
    int precision = 12;
    std::string out;
    bool allow_large = false;
    std::uint64_t memory_budget_mb = 1024;

    std::string format = "csv";
    bool text = false;

    std::string figure_id;
    bool detail = false;
    std::uint64_t n_max = 0;
    std::uint64_t x_max = 0;
    std::uint64_t chain_nmax = 70;
    std::uint64_t nth = 0;
    bool list = false;
};

PrimeTable load_table(const Config& cfg, std::uint64_t default_limit) {
    const std::uint64_t limit = cfg.sieve_limit ? cfg.sieve_limit : default_limit;
    SieveOptions opts;
    opts.memory_budget_bytes = cfg.memory_budget_mb << 20;
    const char* dir = std::getenv("SUPERNORM_SIEVE_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return PrimeTable::build(limit, opts);
    const std::filesystem::path path = std::filesystem::path(dir) / ("primes_" + std::to_string(limit) + ".bin");
    if (std::filesystem::exists(path)) {
        try {
            auto table = PrimeTable::load(path);
            if (table.limit() == limit) return table;
        } catch (const std::exception&) {
            // Corrupt or stale cache: rebuild below.
        }
    }
    auto table = PrimeTable::build(limit, opts);
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    const auto tmp = path.string() + ".tmp";
    try {
        table.save(tmp);
        std::filesystem::rename(tmp, path, ec);
    } catch (const std::exception&) {
        std::filesystem::remove(tmp, ec);
    }
    return table;
}

EnsembleSpec parse_spec(const Config& cfg) {
    EnsembleSpec spec;
    const auto e = parse_ensemble(cfg.ensemble);
    const auto w = parse_weight(cfg.weight);
    const auto m = parse_mode(cfg.mode);
    const auto r = parse_restriction(cfg.restriction);
    if (!e) throw usage_error("unknown ensemble '" + cfg.ensemble + "' (size, perimeter, max)");
    if (!w) throw usage_error("unknown weight '" + cfg.weight + "' (norm, supernorm)");
    if (!m) throw usage_error("unknown mode '" + cfg.mode + "' (individual, cumulative)");
    if (!r) throw usage_error("unknown restriction '" + cfg.restriction + "' (all, no-ones, distinct)");
    spec.ensemble = *e;
    spec.weight = *w;
    spec.mode = *m;
    spec.restriction = *r;
    spec.beta = cfg.beta;
    if (!std::isfinite(spec.beta)) throw usage_error("beta must be finite");
    if (is_divergent(spec)) {
        throw usage_error(describe(spec) + " diverges: the max-part sum runs over infinitely many " +
                          "partitions without converging (every 1^k has norm 1)");
    }
    return spec;
}

void check_stat_caps(const EnsembleSpec& spec, const Config& cfg) {
    if (cfg.allow_large) return;
    std::uint64_t cap = 0;
    std::string what;
    if (cfg.backend == "exact-oracle") {
        if (spec.ensemble == Ensemble::max_part) {
            throw usage_error("the exact oracle cannot enumerate max-part ensembles; use --backend exact");
        }
        cap = spec.ensemble == Ensemble::size ? kOracleSizeCap : kOraclePerimeterCap;
        what = "exact-oracle";
    } else if (spec.ensemble == Ensemble::max_part) {
        return;
    } else if (cfg.backend == "exact") {
        cap = spec.ensemble == Ensemble::size ? kExactSizeCap : kExactPerimeterCap;
        what = "exact";
    } else {
        cap = spec.ensemble == Ensemble::size ? kFloatSizeCap : kFloatPerimeterCap;
        what = "float";
    }
    if (cfg.nmax > cap) {
        throw usage_error("--nmax " + std::to_string(cfg.nmax) + " exceeds the " + what + " " +
                          std::string(name(spec.ensemble)) + " cap of " + std::to_string(cap) +
                          " (pass --allow-large to override)");
    }
}

int run_stat(const Config& cfg, std::ostream& out) {
    const EnsembleSpec spec = parse_spec(cfg);
    if (cfg.backend != "exact" && cfg.backend != "float" && cfg.backend != "exact-oracle") {
        throw usage_error("unknown backend '" + cfg.backend + "' (exact, float, exact-oracle)");
    }
    if (cfg.backend != "float" && !integer_beta(spec.beta)) {
        throw usage_error("exact backends need an integer --beta; use --backend float");
    }
    if (cfg.format != "csv" && cfg.format != "fixture") {
        throw usage_error("unknown format '" + cfg.format + "' (csv, fixture)");
    }
    if (cfg.format == "fixture" && cfg.backend == "float") {
        throw usage_error("--format fixture needs an exact backend");
    }
    check_stat_caps(spec, cfg);
    const PrimeTable table = load_table(cfg, 1'000'000);
    if (cfg.format == "fixture") {
        CoeffSeries series;
        if (cfg.backend == "exact-oracle") {
            series.spec = spec;
            series.nmax = cfg.nmax;
            series.exact = oracle_series(table, spec, cfg.nmax, OracleOptions{cfg.allow_large});
        } else {
            series = evaluate(table, spec, cfg.nmax, Backend::exact, EvalOptions{cfg.allow_large});
        }
        out << to_fixture(series);
        return exit_ok;
    }
    const std::uint64_t first = spec.ensemble == Ensemble::size ? 0 : 1;
    out << "n,value\n";
    if (cfg.backend == "exact-oracle") {
        const auto values = oracle_series(table, spec, cfg.nmax, OracleOptions{cfg.allow_large});
        for (std::uint64_t n = first; n <= cfg.nmax; ++n) out << n << ',' << to_string(values[n]) << '\n';
        return exit_ok;
    }
    const Backend backend = cfg.backend == "exact" ? Backend::exact : Backend::floating;
    const auto series = evaluate(table, spec, cfg.nmax, backend, EvalOptions{cfg.allow_large});
    for (std::uint64_t n = first; n <= cfg.nmax; ++n) {
        out << n << ',';
        if (backend == Backend::exact) {
            out << to_string(series.exact[n]);
        } else {
            out << format_double(series.approx[n]);
        }
        out << '\n';
    }
    return exit_ok;
}

int run_figure(const Config& cfg, std::ostream& out) {
    const auto def = find_figure(cfg.figure_id);
    if (!def) {
        std::string ids;
        for (const auto& f : figures()) ids += (ids.empty() ? "" : ", ") + std::string(f.id);
        throw usage_error("unknown figure '" + cfg.figure_id + "' (" + ids + ")");
    }
    const PrimeTable table = load_table(cfg, 1'000'000);
    write_figure(out, table, *def);
    return exit_ok;
}

int run_verify(const Config& cfg, std::ostream& out) {
    if (cfg.nmax < 1 || cfg.nmax > kOraclePerimeterCap) {
        throw usage_error("verify --nmax must lie in [1, " + std::to_string(kOraclePerimeterCap) + "]");
    }
    if (cfg.chain_nmax < 1 || cfg.chain_nmax > kExactPerimeterCap) {
        throw usage_error("verify --chain-nmax must lie in [1, " + std::to_string(kExactPerimeterCap) + "]");
    }
    const PrimeTable table = load_table(cfg, 1'000'000);
    VerifyOptions opts;
    opts.nmax = cfg.nmax;
    opts.chain_nmax = cfg.chain_nmax;
    const auto report = run_verification(table, opts);
    out << to_text(report);
    const MathConstants& c = math_constants();
    out << std::setprecision(cfg.precision) << "constants: gamma = " << c.gamma << ", e^gamma = " << c.e_gamma
        << ", e^gamma log 7 = " << c.e_gamma * std::log(7.0)
        << " (below 4; differs from the quoted 3.3432)\n";
    return report.passed() ? exit_ok : exit_check_failed;
}

void write_report_rows(std::ostream& out, const BoundReport& r) {
    out << r.bound_name << ',' << r.worst_at << ',' << format_double(r.worst_margin) << ','
        << (r.all_hold ? "true" : "false") << '\n';
}

int run_bounds(const Config& cfg, std::ostream& out, std::ostream& err) {
    const std::uint64_t limit = cfg.sieve_limit ? cfg.sieve_limit : 100'000'000;
    if (limit < kMertensThreshold) {
        throw usage_error("--sieve-limit " + std::to_string(limit) +
                          " is below the threshold 2,278,383 required by the Mertens and max-part window checks");
    }
    const PrimeTable table = load_table(cfg, limit);
    const std::uint64_t n_max = cfg.n_max ? cfg.n_max : std::min<std::uint64_t>(1'000'000, table.count());
    const std::uint64_t x_max = cfg.x_max ? cfg.x_max : std::min<std::uint64_t>(10'000'000, table.limit());
    if (n_max < 6 || n_max > table.count()) {
        throw usage_error("--n-max must lie in [6, " + std::to_string(table.count()) + "] for this sieve");
    }
    if (x_max < kMertensThreshold || x_max > table.limit()) {
        throw usage_error("--x-max must lie in [2,278,383, " + std::to_string(table.limit()) + "]");
    }
    std::ostringstream detail;
    MarginObserver observer;
    if (cfg.detail) {
        observer = [&](std::string_view bound, std::uint64_t at, double margin) {
            detail << bound << ',' << at << ',' << format_double(margin) << ',' << (margin >= 0 ? "true" : "false")
                   << '\n';
        };
    }
    std::vector<BoundReport> reports = verify_prime_bounds(table, IntRange{6, n_max}, observer);
    reports.push_back(verify_log_prime_sum_bound(table, IntRange{2, n_max}, observer));
    for (auto& r : verify_mertens_bounds(table, IntRange{kMertensThreshold, x_max}, observer)) {
        reports.push_back(std::move(r));
    }
    const std::uint64_t window_lo = table.pi(kMertensThreshold - 1) + 1;
    if (window_lo <= table.count()) {
        reports.push_back(mertens_window_check(table, IntRange{window_lo, table.count()}, observer));
    } else {
        err << "note: no prime in [2,278,383, " << table.limit() << "]; window check skipped\n";
    }
    if (cfg.text) {
        for (const auto& r : reports) out << summarize(r, cfg.precision) << '\n';
    } else if (!cfg.detail) {
        out << "bound,n_or_x,margin,holds\n";
        for (const auto& r : reports) write_report_rows(out, r);
    } else {
        out << "bound,n_or_x,margin,holds\n" << detail.str();
    }
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.all_hold; });
    return ok ? exit_ok : exit_check_failed;
}

int run_primes(const Config& cfg, std::ostream& out) {
    const PrimeTable table = load_table(cfg, 1'000'000);
    if (cfg.nth) {
        out << "n,prime\n" << cfg.nth << ',' << table.nth(cfg.nth) << '\n';
    } else if (cfg.list) {
        out << "n,prime\n";
        for (std::size_t i = 1; i <= table.count(); ++i) out << i << ',' << table.nth(i) << '\n';
    } else {
        out << "limit,count,largest\n"
            << table.limit() << ',' << table.count() << ',' << table.nth(table.count()) << '\n';
    }
    return exit_ok;
}

int run_conjectures(const Config& cfg, std::ostream& out) {
    if (cfg.nmax < 1 || cfg.nmax > kFloatPerimeterCap) {
        throw usage_error("conjectures --nmax must lie in [1, " + std::to_string(kFloatPerimeterCap) + "]");
    }
    const PrimeTable table = load_table(cfg, 1'000'000);
    if (cfg.text) {
        for (const auto& report : conjecture_report(table, cfg.nmax)) out << summarize(report, cfg.precision) << '\n';
        return exit_ok;
    }
    out << "table,n,value,prediction,ratio\n";
    for (const auto& report : conjecture_report(table, cfg.nmax)) {
        for (const auto& row : report.rows) {
            out << report.label << ',' << row.n << ',' << format_double(row.value) << ','
                << format_double(row.prediction) << ',' << format_double(row.ratio) << '\n';
        }
    }
    if (cfg.nmax >= 2) {
        for (const auto& row : no_ones_parity(table, std::min<std::uint64_t>(cfg.nmax / 2, 30))) {
            out << "no_ones_parity," << row.k << ',' << format_double(row.odd_value) << ','
                << format_double(row.even_value) << ',' << format_double(row.odd_value / row.even_value) << '\n';
        }
    }
    return exit_ok;
}

void add_spec_options(CLI::App* sub, Config& cfg) {
    sub->add_option("--ensemble", cfg.ensemble, "size | perimeter | max")->capture_default_str();
    sub->add_option("--weight", cfg.weight, "norm | supernorm")->capture_default_str();
    sub->add_option("--mode", cfg.mode, "individual | cumulative")->capture_default_str();
    sub->add_option("--restrict", cfg.restriction, "all (none) | no-ones | distinct")->capture_default_str();
    sub->add_option("--beta", cfg.beta, "exponent on the weight")->capture_default_str();
}

void add_common_options(CLI::App* sub, Config& cfg) {
    sub->add_option("--sieve-limit", cfg.sieve_limit, "sieve upper bound (default 10^6; 10^8 for bounds)");
    sub->add_option("--memory-budget-mb", cfg.memory_budget_mb, "sieve memory budget")->capture_default_str();
    sub->add_option("--precision", cfg.precision, "digits in text summaries")->capture_default_str();
    sub->add_option("--out", cfg.out, "output file (default: standard output)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Reciprocal norm and supernorm statistics of integer partitions"};
    app.name("supernorm");
    app.require_subcommand(1);

    auto* stat = app.add_subcommand("stat", "values of one statistic for n up to --nmax");
    add_spec_options(stat, cfg);
    stat->add_option("--nmax", cfg.nmax, "largest n")->capture_default_str();
    stat->add_option("--backend", cfg.backend, "exact | float | exact-oracle")->capture_default_str();
    stat->add_flag("--allow-large", cfg.allow_large, "lift the default nmax caps");
    stat->add_option("--format", cfg.format, "csv | fixture (n;numerator/denominator)")->capture_default_str();
    add_common_options(stat, cfg);

    auto* figure = app.add_subcommand("figure", "plot data for one figure");
    figure->add_option("id", cfg.figure_id, "figure id")->required();
    add_common_options(figure, cfg);

    auto* verify = app.add_subcommand("verify", "exact identities, inequalities and oracle agreement");
    verify->add_option("--nmax", cfg.nmax, "oracle range")->capture_default_str();
    verify->add_option("--chain-nmax", cfg.chain_nmax, "range of the cumulative chain")->capture_default_str();
    add_common_options(verify, cfg);

    auto* bounds = app.add_subcommand("bounds", "explicit prime-number bounds over sieve ranges");
    bounds->add_option("--n-max", cfg.n_max, "prime-index range end (default min(10^6, count))");
    bounds->add_option("--x-max", cfg.x_max, "Mertens range end (default min(10^7, limit))");
    bounds->add_flag("--detail", cfg.detail, "one row per checked point");
    bounds->add_flag("--text", cfg.text, "text summary instead of CSV");
    add_common_options(bounds, cfg);

    auto* primes = app.add_subcommand("primes", "sieve summary or listing");
    primes->add_option("--nth", cfg.nth, "print p_n");
    primes->add_flag("--list", cfg.list, "print every prime");
    add_common_options(primes, cfg);

    auto* conj = app.add_subcommand("conjectures", "descriptive ratio tables");
    conj->add_option("--nmax", cfg.nmax, "largest n")->capture_default_str();
    conj->add_flag("--text", cfg.text, "text tables instead of CSV");
    add_common_options(conj, cfg);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    std::ofstream file;
    std::ostringstream buffer;
    try {
        int code = exit_ok;
        if (stat->parsed()) code = run_stat(cfg, buffer);
        else if (figure->parsed()) code = run_figure(cfg, buffer);
        else if (verify->parsed()) code = run_verify(cfg, buffer);
        else if (bounds->parsed()) code = run_bounds(cfg, buffer, err);
        else if (primes->parsed()) code = run_primes(cfg, buffer);
        else if (conj->parsed()) code = run_conjectures(cfg, buffer);
        if (cfg.out.empty()) {
            out << buffer.str();
        } else {
            file.open(cfg.out, std::ios::binary | std::ios::trunc);
            if (!file) {
                err << "error: cannot open " << cfg.out << " for writing\n";
                return exit_usage;
            }
            file << buffer.str();
        }
        return code;
    } catch (const usage_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const resource_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return exit_resource;
    } catch (const std::logic_error& e) {
        // invalid_argument, out_of_range, domain_error, unsupported_error
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_resource;
    }
}

}  // namespace supernorm::cli
