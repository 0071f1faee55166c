#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "supernorm/asymptotics.hpp"
#include "supernorm/summation.hpp"

using namespace supernorm;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(3'000'000);
    return t;
}

const BoundReport& find(const InequalitySuite& s, std::string_view name) {
    for (const auto& r : s.reports) {
        if (r.bound_name == name) return r;
    }
    throw std::runtime_error("missing report");
}

}  // namespace

TEST(Predictor, Values) {
    const auto& c = math_constants();
    EXPECT_EQ(predictor(c, AsymptoticModel::unit, 17), 1.0);
    EXPECT_NEAR(predictor(c, AsymptoticModel::lehmer_linear, 10), 5.6145948356688517, 1e-14);
    EXPECT_NEAR(predictor(c, AsymptoticModel::log, 7), 3.4658068943, 1e-9);
    EXPECT_LT(predictor(c, AsymptoticModel::log, 7), 4.0);
    EXPECT_EQ(predictor(c, AsymptoticModel::ident, 9), 9.0);
    EXPECT_NEAR(predictor(c, AsymptoticModel::inv, 2), c.e_gamma / 2, 1e-16);
    EXPECT_THROW(predictor(c, AsymptoticModel::log_loglog, 1), std::domain_error);
    EXPECT_NO_THROW(predictor(c, AsymptoticModel::log_loglog, 2));
    EXPECT_THROW(predictor(c, AsymptoticModel::unit, 0), std::domain_error);
}

TEST(ResidualReport, RowsAreConsistent) {
    const auto series = evaluate(table(), {Ensemble::max_part, Mode::cumulative, Restriction::all, Weight::supernorm, 1},
                                 20, Backend::exact);
    const auto report = residual_report(series, AsymptoticModel::log_loglog, IntRange{2, 20});
    ASSERT_EQ(report.rows.size(), 19u);
    for (const auto& row : report.rows) {
        EXPECT_EQ(row.residual, row.value - row.prediction);
        EXPECT_NEAR(row.ratio * row.prediction, row.value, 4e-16 * row.value);
    }
    const auto& r3 = report.rows[1];
    EXPECT_EQ(r3.n, 3u);
    EXPECT_EQ(r3.value, 3.75);
    // e^gamma (log 3 + log log 3) = 2.12421...
    EXPECT_NEAR(r3.prediction, 2.1242140, 1e-6);
    EXPECT_NEAR(r3.residual, 1.6257860, 1e-6);
    EXPECT_THROW(residual_report(series, AsymptoticModel::unit, IntRange{1, 21}), std::invalid_argument);
    EXPECT_THROW(residual_report(series, AsymptoticModel::log_loglog, IntRange{1, 5}), std::domain_error);
}

TEST(ResidualReport, StarMaxIsExactlyOne) {
    const auto series = evaluate(table(), {Ensemble::max_part, Mode::individual, Restriction::no_ones, Weight::norm, 1},
                                 50, Backend::exact);
    for (const auto& row : residual_report(series, AsymptoticModel::unit, IntRange{2, 50}).rows) {
        EXPECT_EQ(row.residual, 0.0);
    }
}

TEST(InequalitySuite, ExactToSeventy) {
    const auto s = inequality_suite(table(), 70, Backend::exact);
    for (const auto& r : s.reports) EXPECT_TRUE(r.all_hold) << r.bound_name << " at " << r.worst_at;
    ASSERT_EQ(s.chain.size(), 70u);
    EXPECT_EQ(s.strict_from, 3u);
    EXPECT_FALSE(s.chain[0].strict_size_per);  // n = 1: equal
    EXPECT_FALSE(s.chain[1].strict_size_per);  // n = 2: 25/12 both
    EXPECT_TRUE(s.chain[0].strict_per_max);
    EXPECT_EQ(find(s, "size_norm_identity").worst_margin, 0.0);
    EXPECT_EQ(find(s, "perimeter_norm_identity").worst_margin, 0.0);
    EXPECT_NEAR(s.witness_size, 0.19380634516521716, 1e-15);
    EXPECT_NEAR(s.witness_perimeter, 0.19288064129981503, 1e-15);
}

TEST(InequalitySuite, FloatBackendAgrees) {
    const auto s = inequality_suite(table(), 70, Backend::floating);
    for (const auto& r : s.reports) EXPECT_TRUE(r.all_hold) << r.bound_name;
    EXPECT_EQ(s.strict_from, 3u);
}

TEST(InequalitySuite, NoWitnessBelowFourteen) {
    const auto s = inequality_suite(table(), 10, Backend::exact);
    for (const auto& r : s.reports) EXPECT_NE(r.bound_name, "size_vs_perimeter_witness");
}

TEST(Conjectures, DescriptiveRows) {
    const auto reports = conjecture_report(table(), 70);
    ASSERT_EQ(reports.size(), 4u);
    const auto& max = reports[2];
    EXPECT_NEAR(max.rows[2].value * 3 / math_constants().e_gamma, 1.263, 0.001);
    EXPECT_NEAR(max.rows[2].ratio, 3 * 0.75 / math_constants().e_gamma, 1e-15);
    const auto& product = reports[3];
    EXPECT_NEAR(product.rows[2].value, 649.0 / 720.0, 1e-15);
    EXPECT_EQ(product.rows.size(), 70u);
}

TEST(Conjectures, NoOnesParity) {
    const auto rows = no_ones_parity(table(), 10);
    ASSERT_EQ(rows.size(), 10u);
    // W*(3) = 1/3 < W*(2) = 1/2.
    EXPECT_TRUE(rows[0].odd_smaller);
    EXPECT_DOUBLE_EQ(rows[0].even_value, 0.5);
}

TEST(MertensWindow, Threshold) {
    const std::uint64_t lo = table().pi(kMertensThreshold - 1) + 1;
    EXPECT_THROW(mertens_window_check(table(), IntRange{10, 20}), std::invalid_argument);
    EXPECT_THROW(mertens_window_check(table(), IntRange{lo - 1, lo}), std::invalid_argument);
    const auto one = mertens_window_check(table(), IntRange{lo, lo});
    EXPECT_TRUE(one.all_hold);
    EXPECT_EQ(one.points_checked, 1u);
    const auto all = mertens_window_check(table(), IntRange{lo, table().count()});
    EXPECT_TRUE(all.all_hold);
    EXPECT_GT(all.worst_margin, 1e-11);
}

TEST(MertensWindow, IncrementalProductMatchesFromScratch) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<std::uint64_t> pick(1, table().count());
    CompensatedSum log_c;
    std::vector<double> running(table().count() + 1);
    for (std::uint64_t j = 1; j <= table().count(); ++j) {
        log_c.add(-std::log1p(-1.0 / static_cast<double>(table().nth(j))));
        running[j] = std::exp(log_c.value());
    }
    for (int i = 0; i < 100; ++i) {
        const auto n = pick(rng);
        const double scratch = max_supernorm_cumulative(table(), n);
        ASSERT_NEAR(running[n] / scratch, 1.0, 1e-11) << n;
    }
}
