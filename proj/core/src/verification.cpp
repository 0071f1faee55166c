#include "supernorm/verification.hpp"

#include <algorithm>
#include <sstream>

#include "supernorm/asymptotics.hpp"
#include "supernorm/enumerate.hpp"
#include "supernorm/oracle.hpp"

namespace supernorm {
namespace {

std::string mismatch(const std::string& what, std::uint64_t n, const std::string& expected_label,
                     const std::string& expected, const std::string& actual_label,
                     const std::string& actual) {
    return what + ": first mismatch at n=" + std::to_string(n) + ": " + expected_label + " " + expected +
           ", " + actual_label + " " + actual;
}

void fail(SuiteResult& suite, std::string line) {
    suite.passed = false;
    suite.failures.push_back(std::move(line));
}

// Exact series values, whichever backend produced them.
std::string show(const CoeffSeries& s, std::uint64_t n) {
    if (s.backend == Backend::exact) return to_string(s.exact[n]);
    std::ostringstream out;
    out.precision(17);
    out << s.approx[n];
    return out.str();
}

bool exact_at(const CoeffSeries& s, std::uint64_t n, const Rational& expected) {
    return s.backend == Backend::exact && n < s.exact.size() && s.exact[n] == expected;
}

SuiteResult oracle_equivalence(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "oracle_equivalence";
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        for (Weight w : {Weight::norm, Weight::supernorm}) {
            for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
                for (double beta : {1.0, 2.0}) {
                    for (Mode m : {Mode::individual, Mode::cumulative}) {
                        const EnsembleSpec spec{e, m, r, w, beta};
                        const auto expected = ev.oracle(table, spec, o.nmax);
                        const auto got = ev.series(table, spec, o.nmax, Backend::exact);
                        for (std::uint64_t n = 0; n <= o.nmax; ++n) {
                            ++suite.checks;
                            if (!exact_at(got, n, expected[n])) {
                                fail(suite, mismatch(describe(spec), n, "oracle", to_string(expected[n]),
                                                     "genfun", show(got, n)));
                                break;
                            }
                        }
                    }
                }
            }
        }
    }
    return suite;
}

SuiteResult norm_identities(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "norm_identities";
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        const EnsembleSpec lhs{e, Mode::individual, Restriction::all, Weight::norm, 1.0};
        const EnsembleSpec rhs{e, Mode::cumulative, Restriction::no_ones, Weight::norm, 1.0};
        const std::string what = std::string(name(e)) + ": W(n) = C*(n)";
        // Both at oracle level and through the fast evaluator.
        const auto lo = ev.oracle(table, lhs, o.nmax);
        const auto ro = ev.oracle(table, rhs, o.nmax);
        const auto lg = ev.series(table, lhs, o.nmax, Backend::exact);
        const auto rg = ev.series(table, rhs, o.nmax, Backend::exact);
        for (std::uint64_t n = 1; n <= o.nmax; ++n) {
            suite.checks += 2;
            if (lo[n] != ro[n]) {
                fail(suite, mismatch(what + " (oracle)", n, "W", to_string(lo[n]), "C*", to_string(ro[n])));
                break;
            }
            if (!exact_at(rg, n, lg.exact.at(n))) {
                fail(suite, mismatch(what + " (genfun)", n, "W", show(lg, n), "C*", show(rg, n)));
                break;
            }
        }
    }
    return suite;
}

SuiteResult chain(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "cumulative_chain";
    const auto c = [&](Ensemble e) {
        return ev.series(table, EnsembleSpec{e, Mode::cumulative, Restriction::all, Weight::supernorm, 1.0},
                         o.chain_nmax, Backend::exact);
    };
    const auto cs = c(Ensemble::size);
    const auto cp = c(Ensemble::perimeter);
    const auto cm = c(Ensemble::max_part);
    std::uint64_t last_non_strict = 0;
    for (std::uint64_t n = 1; n <= o.chain_nmax; ++n) {
        ++suite.checks;
        const int left = cmp(cs.exact.at(n), cp.exact.at(n));
        const int right = cmp(cp.exact.at(n), cm.exact.at(n));
        if (left > 0 || right > 0) {
            fail(suite, "Chat_size <= Chat_per <= Chat_max fails at n=" + std::to_string(n) + ": " +
                            show(cs, n) + ", " + show(cp, n) + ", " + show(cm, n));
            return suite;
        }
        if (left == 0 || right == 0) last_non_strict = n;
    }
    suite.notes.push_back("strict for n >= " + std::to_string(last_non_strict + 1));
    return suite;
}

SuiteResult perimeter_bound(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "perimeter_norm_bound";
    const EnsembleSpec spec{Ensemble::perimeter, Mode::individual, Restriction::all, Weight::norm, 1.0};
    const auto exact = ev.oracle(table, spec, o.nmax);
    for (std::uint64_t n = 1; n <= o.nmax; ++n) {
        ++suite.checks;
        if (exact[n] > Rational(BigInt(static_cast<unsigned long>(n)))) {
            fail(suite, "W_per(n) <= n fails at n=" + std::to_string(n) + ": " + to_string(exact[n]));
            return suite;
        }
    }
    const auto approx = ev.series(table, spec, o.float_bound_nmax, Backend::floating);
    for (std::uint64_t n = 1; n <= o.float_bound_nmax; ++n) {
        ++suite.checks;
        if (approx.value(n) > static_cast<double>(n)) {
            fail(suite, "W_per(n) <= n fails at n=" + std::to_string(n) + " (float): " + show(approx, n));
            return suite;
        }
    }
    return suite;
}

SuiteResult closed_forms(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "closed_forms";
    const auto star = [&](Mode m) {
        return ev.series(table, EnsembleSpec{Ensemble::max_part, m, Restriction::no_ones, Weight::norm, 1.0},
                         o.closed_form_nmax, Backend::exact);
    };
    const auto w = star(Mode::individual);
    const auto c = star(Mode::cumulative);
    for (std::uint64_t n = 0; n <= o.closed_form_nmax; ++n) {
        suite.checks += 2;
        const Rational want_w = n == 1 ? 0 : 1;
        const Rational want_c = n == 0 ? 1 : Rational(BigInt(static_cast<unsigned long>(n)));
        if (!exact_at(w, n, want_w)) {
            fail(suite, mismatch("W*_max", n, "expected", to_string(want_w), "got", show(w, n)));
            break;
        }
        if (!exact_at(c, n, want_c)) {
            fail(suite, mismatch("C*_max", n, "expected", to_string(want_c), "got", show(c, n)));
            break;
        }
    }
    // The telescoping evaluation, sampled.
    for (std::uint64_t n : {std::uint64_t{0}, std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{7},
                            std::uint64_t{100}, o.closed_form_nmax}) {
        ++suite.checks;
        if (max_norm_star(n, Mode::individual) != (n == 1 ? 0 : 1) ||
            max_norm_star(n, Mode::cumulative) != (n == 0 ? 1 : Rational(BigInt(static_cast<unsigned long>(n))))) {
            fail(suite, "telescoping product disagrees at n=" + std::to_string(n));
        }
    }
    const std::uint64_t pn = std::min<std::uint64_t>(o.product_nmax, table.count());
    const auto cmax = ev.series(
        table, EnsembleSpec{Ensemble::max_part, Mode::cumulative, Restriction::all, Weight::supernorm, 1.0}, pn,
        Backend::exact);
    Rational product = 1;
    for (std::uint64_t n = 0; n <= pn; ++n) {
        if (n > 0) {
            const BigInt p(static_cast<unsigned long>(table.nth(n)));
            product *= Rational(p, p - 1);
        }
        ++suite.checks;
        if (!exact_at(cmax, n, product)) {
            fail(suite, mismatch("Chat_max", n, "product", to_string(product), "got", show(cmax, n)));
            break;
        }
    }
    return suite;
}

SuiteResult bijection(const PrimeTable& table, const VerifyOptions& o) {
    SuiteResult suite;
    suite.name = "supernorm_bijection";
    std::vector<BigInt> seen;
    for_each_partition_by_supernorm_bound(table, o.bijection_bound,
                                          [&](const Partition& lambda) { seen.push_back(supernorm(table, lambda)); });
    std::sort(seen.begin(), seen.end());
    suite.checks = seen.size();
    if (seen.size() != o.bijection_bound) {
        fail(suite, "expected " + std::to_string(o.bijection_bound) + " partitions, enumerated " +
                        std::to_string(seen.size()));
        return suite;
    }
    for (std::uint64_t i = 0; i < seen.size(); ++i) {
        if (seen[i] != BigInt(static_cast<unsigned long>(i + 1))) {
            fail(suite, "sorted supernorms diverge from 1..B at position " + std::to_string(i + 1) + ": " +
                            seen[i].get_str());
            break;
        }
    }
    return suite;
}

SuiteResult witness(const PrimeTable& table, const Evaluators& ev) {
    SuiteResult suite;
    suite.name = "witness_n14";
    const auto w = [&](Ensemble e) {
        return ev.series(table, EnsembleSpec{e, Mode::individual, Restriction::all, Weight::supernorm, 1.0}, 14,
                         Backend::exact);
    };
    const auto ws = w(Ensemble::size);
    const auto wp = w(Ensemble::perimeter);
    suite.checks = 1;
    std::ostringstream values;
    values.precision(10);
    values << "What_size(14) = " << ws.value(14) << ", What_per(14) = " << wp.value(14);
    if (!(ws.exact.at(14) > wp.exact.at(14))) {
        fail(suite, "What_size(14) > What_per(14) fails: " + values.str());
    } else {
        suite.notes.push_back(values.str());
    }
    return suite;
}

}  // namespace

Evaluators default_evaluators() {
    Evaluators ev;
    ev.series = [](const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t nmax, Backend backend) {
        return evaluate(table, spec, nmax, backend, EvalOptions{true});
    };
    ev.oracle = [](const PrimeTable& table, const EnsembleSpec& spec, std::uint64_t nmax) {
        return oracle_series(table, spec, nmax);
    };
    return ev;
}

bool VerificationReport::passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed; });
}

VerificationReport run_verification(const PrimeTable& table, const VerifyOptions& o, const Evaluators& ev) {
    VerificationReport report;
    report.suites.push_back(oracle_equivalence(table, o, ev));
    report.suites.push_back(norm_identities(table, o, ev));
    report.suites.push_back(chain(table, o, ev));
    report.suites.push_back(perimeter_bound(table, o, ev));
    report.suites.push_back(closed_forms(table, o, ev));
    report.suites.push_back(bijection(table, o));
    report.suites.push_back(witness(table, ev));
    return report;
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& s : report.suites) {
        out << (s.passed ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)\n";
        for (const auto& f : s.failures) out << "  " << f << '\n';
        for (const auto& note : s.notes) out << "  note: " << note << '\n';
    }
    out << (report.passed() ? "all suites passed" : "verification failed") << '\n';
    return out.str();
}

}  // namespace supernorm
