#include <gtest/gtest.h>

#include "supernorm/verification.hpp"

using namespace supernorm;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(1'000'000);
    return t;
}

VerifyOptions small_options() {
    VerifyOptions o;
    o.nmax = 8;
    o.chain_nmax = 30;
    o.float_bound_nmax = 200;
    o.closed_form_nmax = 500;
    o.bijection_bound = 2000;
    return o;
}

// Perimeter DP whose multiset recursion uses parts < m instead of <= m: the
// repeated largest part is lost, first visible at n = 2 via (1,1).
Rational buggy_perimeter_term(const PrimeTable& t, std::uint64_t n) {
    std::vector<Rational> tbl(n + 1, Rational(0));
    tbl[0] = 1;
    Rational total = 0;
    for (std::uint64_t m = 1; m <= n; ++m) {
        const Rational w(1, BigInt(static_cast<unsigned long>(t.nth(m))));
        total += w * tbl[n - m];
        for (std::uint64_t r = 1; r <= n; ++r) tbl[r] += w * tbl[r - 1];
    }
    return total;
}

}  // namespace

TEST(Verification, AllSuitesPass) {
    const auto report = run_verification(table(), small_options());
    ASSERT_EQ(report.suites.size(), 7u);
    const std::vector<std::string> names{"oracle_equivalence", "norm_identities", "cumulative_chain",
                                         "perimeter_norm_bound", "closed_forms", "supernorm_bijection",
                                         "witness_n14"};
    for (std::size_t i = 0; i < names.size(); ++i) {
        EXPECT_EQ(report.suites[i].name, names[i]);
        EXPECT_TRUE(report.suites[i].passed) << to_text(report);
        EXPECT_GT(report.suites[i].checks, 0u);
    }
    EXPECT_TRUE(report.passed());
    EXPECT_NE(to_text(report).find("strict for n >= 3"), std::string::npos);
}

TEST(Verification, InjectedPerimeterFaultIsNamed) {
    Evaluators ev = default_evaluators();
    const auto good = ev.series;
    ev.series = [good](const PrimeTable& t, const EnsembleSpec& s, std::uint64_t nmax, Backend b) {
        auto out = good(t, s, nmax, b);
        const bool target = s.ensemble == Ensemble::perimeter && s.weight == Weight::supernorm &&
                            s.restriction == Restriction::all && s.beta == 1.0 && s.mode == Mode::individual &&
                            b == Backend::exact;
        if (target) {
            for (std::uint64_t n = 1; n <= nmax; ++n) out.exact[n] = buggy_perimeter_term(t, n);
        }
        return out;
    };
    const auto report = run_verification(table(), small_options(), ev);
    EXPECT_FALSE(report.passed());
    const auto& first = report.suites[0];
    ASSERT_FALSE(first.passed);
    ASSERT_EQ(first.failures.size(), 1u);
    EXPECT_NE(first.failures[0].find("n=2"), std::string::npos) << first.failures[0];
    EXPECT_NE(first.failures[0].find("7/12"), std::string::npos) << first.failures[0];
    EXPECT_NE(first.failures[0].find("1/3"), std::string::npos) << first.failures[0];
    EXPECT_NE(to_text(report).find("FAIL oracle_equivalence"), std::string::npos);
}

TEST(Verification, BrokenOracleIsCaught) {
    Evaluators ev = default_evaluators();
    const auto good = ev.oracle;
    ev.oracle = [good](const PrimeTable& t, const EnsembleSpec& s, std::uint64_t nmax) {
        auto v = good(t, s, nmax);
        if (s.ensemble == Ensemble::size && s.weight == Weight::norm && s.mode == Mode::cumulative &&
            s.restriction == Restriction::no_ones && nmax >= 5) {
            v[5] += Rational(1, 1000);
        }
        return v;
    };
    const auto report = run_verification(table(), small_options(), ev);
    EXPECT_FALSE(report.suites[0].passed);
    EXPECT_FALSE(report.suites[1].passed);
    EXPECT_NE(report.suites[1].failures.at(0).find("n=5"), std::string::npos);
}
