#include <gtest/gtest.h>

#include <cfloat>
#include <random>

#include "reference.hpp"
#include "supernorm/errors.hpp"
#include "supernorm/genfun.hpp"
#include "supernorm/oracle.hpp"

using namespace supernorm;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(1'000'000);
    return t;
}

EnsembleSpec spec(Ensemble e, Weight w, Mode m, Restriction r = Restriction::all, double beta = 1) {
    return EnsembleSpec{e, m, r, w, beta};
}

}  // namespace

TEST(SizeSeries, HandValues) {
    const auto norm_all = size_series(table(), Weight::norm, Restriction::all, 1, 3, Backend::exact);
    EXPECT_EQ(norm_all.exact[3], Rational(11, 6));
    const auto sn = size_series(table(), Weight::supernorm, Restriction::all, 1, 3, Backend::exact);
    EXPECT_EQ(sn.exact[3], Rational(59, 120));
    const auto dist = size_series(table(), Weight::norm, Restriction::distinct, 1, 3, Backend::exact);
    EXPECT_EQ(dist.exact[3], Rational(5, 6));
    const auto star = size_series(table(), Weight::norm, Restriction::no_ones, 1, 3, Backend::exact);
    EXPECT_EQ(star.exact[0], 1);
    EXPECT_EQ(star.exact[1], 0);
}

TEST(PerimeterSeries, HandValues) {
    const auto sn = perimeter_series(table(), Weight::supernorm, Restriction::all, 1, 3, Backend::exact);
    EXPECT_EQ(sn.exact[0], 0);
    EXPECT_EQ(sn.exact[2], Rational(7, 12));
    EXPECT_EQ(sn.exact[3], Rational(217, 360));
    const auto nm = perimeter_series(table(), Weight::norm, Restriction::all, 1, 3, Backend::exact);
    EXPECT_EQ(nm.exact[2], Rational(3, 2));
}

TEST(Genfun, MatchesReferenceForEverySpec) {
    using reference::Kind;
    const int nmax = 10;
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        for (Weight w : {Weight::norm, Weight::supernorm}) {
            for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
                for (int beta : {1, 2, 3}) {
                    const auto ind = evaluate(table(), spec(e, w, Mode::individual, r, beta), nmax, Backend::exact);
                    const auto cum = evaluate(table(), spec(e, w, Mode::cumulative, r, beta), nmax, Backend::exact);
                    const Kind kind = e == Ensemble::size ? Kind::size : Kind::perimeter;
                    const int lo = r == Restriction::no_ones ? 2 : 1;
                    for (int n = 1; n <= nmax; ++n) {
                        const bool d = r == Restriction::distinct;
                        const bool sn = w == Weight::supernorm;
                        ASSERT_EQ(ind.exact[n], reference::individual(kind, sn, lo, d, beta, n))
                            << describe(ind.spec) << " n=" << n;
                        ASSERT_EQ(cum.exact[n], reference::cumulative(kind, sn, lo, d, beta, n))
                            << describe(cum.spec) << " n=" << n;
                    }
                }
            }
        }
    }
}

TEST(Genfun, MatchesOracleToTwenty) {
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        for (Weight w : {Weight::norm, Weight::supernorm}) {
            for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
                const auto s = spec(e, w, Mode::individual, r, 1);
                const auto want = oracle_series(table(), s, 20);
                const auto got = evaluate(table(), s, 20, Backend::exact);
                for (std::uint64_t n = 0; n <= 20; ++n) ASSERT_EQ(got.exact[n], want[n]) << describe(s) << n;
            }
        }
    }
}

TEST(Genfun, FloatMatchesExactToHundred) {
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter, Ensemble::max_part}) {
        for (Weight w : {Weight::norm, Weight::supernorm}) {
            for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
                for (Mode m : {Mode::individual, Mode::cumulative}) {
                    const auto s = spec(e, w, m, r, 1);
                    if (is_divergent(s)) continue;
                    const std::uint64_t nmax = e == Ensemble::perimeter ? 80 : 100;
                    const auto exact = evaluate(table(), s, nmax, Backend::exact);
                    const auto approx = evaluate(table(), s, nmax, Backend::floating);
                    for (std::uint64_t n = 0; n <= nmax; ++n) {
                        const double x = to_double(exact.exact[n]);
                        ASSERT_LE(std::abs(approx.approx[n] - x), 1e-12 * std::abs(x)) << describe(s) << " n=" << n;
                    }
                }
            }
        }
    }
}

TEST(Genfun, NonIntegerBetaOnlyInFloat) {
    EXPECT_THROW(evaluate(table(), spec(Ensemble::size, Weight::norm, Mode::individual, Restriction::all, 1.5), 5,
                          Backend::exact),
                 unsupported_error);
    const auto s = spec(Ensemble::perimeter, Weight::supernorm, Mode::individual, Restriction::all, 0.5);
    const auto approx = evaluate(table(), s, 10, Backend::floating);
    const auto oracle = oracle_series_float(table(), s, 10);
    for (std::uint64_t n = 0; n <= 10; ++n) ASSERT_NEAR(approx.approx[n], oracle[n], 1e-13 * oracle[n]);
}

TEST(Genfun, BetaZeroIsCardinality) {
    const auto per = evaluate(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual, Restriction::all, 0),
                              20, Backend::exact);
    for (std::uint64_t n = 1; n <= 20; ++n) ASSERT_EQ(per.exact[n], Rational(BigInt(1) << (n - 1)));
}

TEST(Genfun, Caps) {
    EXPECT_THROW(evaluate(table(), spec(Ensemble::size, Weight::norm, Mode::individual), 121, Backend::exact),
                 resource_error);
    EXPECT_THROW(evaluate(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual), 81, Backend::exact),
                 resource_error);
    EXPECT_NO_THROW(evaluate(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual), 81,
                             Backend::exact, EvalOptions{true}));
    const auto small = PrimeTable::build(20);
    EXPECT_THROW(evaluate(small, spec(Ensemble::size, Weight::supernorm, Mode::individual), 10, Backend::exact),
                 std::out_of_range);
}

TEST(Cumulative, RoundTrip) {
    std::mt19937_64 rng(3);
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        for (Backend b : {Backend::exact, Backend::floating}) {
            const auto w = evaluate(table(), spec(e, Weight::supernorm, Mode::individual), 30, b);
            const auto c = cumulative(w);
            EXPECT_EQ(c.spec.mode, Mode::cumulative);
            const auto back = difference(c);
            for (std::uint64_t n = 0; n <= 30; ++n) {
                if (b == Backend::exact) {
                    ASSERT_EQ(back.exact[n], w.exact[n]);
                } else {
                    ASSERT_NEAR(back.approx[n], w.approx[n], 4 * DBL_EPSILON * c.approx[n]);
                }
            }
            EXPECT_THROW(cumulative(c), std::invalid_argument);
        }
    }
    const auto ws = evaluate(table(), spec(Ensemble::size, Weight::supernorm, Mode::individual), 2, Backend::exact);
    EXPECT_EQ(cumulative(ws).exact[2], Rational(25, 12));
    const auto wp =
        evaluate(table(), spec(Ensemble::perimeter, Weight::supernorm, Mode::individual), 2, Backend::exact);
    EXPECT_EQ(cumulative(wp).exact[2], Rational(25, 12));
}

TEST(Cumulative, OfZerosIsOne) {
    CoeffSeries zeros;
    zeros.spec = spec(Ensemble::perimeter, Weight::norm, Mode::individual);
    zeros.nmax = 5;
    zeros.backend = Backend::exact;
    zeros.exact.assign(6, Rational(0));
    const auto c = cumulative(zeros);
    for (const auto& v : c.exact) EXPECT_EQ(v, 1);
}

TEST(MaxSupernorm, ClosedForms) {
    EXPECT_EQ(max_supernorm_cumulative_exact(table(), 0), 1);
    EXPECT_EQ(max_supernorm_cumulative_exact(table(), 1), 2);
    EXPECT_EQ(max_supernorm_cumulative_exact(table(), 3), Rational(15, 4));
    EXPECT_EQ(max_supernorm_individual_exact(table(), 1), 1);
    EXPECT_EQ(max_supernorm_individual_exact(table(), 2), 1);
    EXPECT_EQ(max_supernorm_individual_exact(table(), 3), Rational(3, 4));
    EXPECT_DOUBLE_EQ(max_supernorm_cumulative(table(), 3), 3.75);
    EXPECT_DOUBLE_EQ(max_supernorm_individual(table(), 3), 0.75);
    double prev = 0;
    for (std::uint64_t n = 0; n <= 5000; ++n) {
        const double c = max_supernorm_cumulative(table(), n);
        ASSERT_GT(c, prev);
        prev = c;
    }
}

TEST(MaxSupernorm, SeriesAgreesWithClosedForms) {
    const auto c = max_series(table(), Weight::supernorm, Restriction::all, 1, Mode::cumulative, 200, Backend::exact);
    const auto w = max_series(table(), Weight::supernorm, Restriction::all, 1, Mode::individual, 200, Backend::exact);
    for (std::uint64_t n = 1; n <= 200; ++n) {
        ASSERT_EQ(c.exact[n], max_supernorm_cumulative_exact(table(), n));
        ASSERT_EQ(w.exact[n], c.exact[n] - c.exact[n - 1]);
        ASSERT_EQ(w.exact[n], max_supernorm_individual_exact(table(), n));
    }
    EXPECT_THROW(max_series(table(), Weight::norm, Restriction::all, 1, Mode::cumulative, 5, Backend::exact),
                 unsupported_error);
}

TEST(MaxSupernorm, DominatesTruncatedOracle) {
    for (std::uint64_t n = 1; n <= 5; ++n) {
        const Rational full = max_supernorm_cumulative_exact(table(), n);
        Rational prev_gap = full;
        for (std::uint64_t cut = 0; cut <= 60; cut += 5) {
            const auto partial =
                oracle_max_truncated(table(), Weight::supernorm, Restriction::all, Mode::cumulative, n, cut);
            const Rational gap = full - partial;
            ASSERT_GT(gap, 0);
            ASSERT_LE(gap, prev_gap);
            prev_gap = gap;
        }
    }
}

TEST(MaxSupernorm, DistinctPartsAreFinite) {
    // Parts <= 2 distinct: {}, (1), (2), (2,1) -> 1 + 1 + 1/2 + 1/2 = 3.
    const auto c = max_series(table(), Weight::norm, Restriction::distinct, 1, Mode::cumulative, 3, Backend::exact);
    EXPECT_EQ(c.exact[2], 3);
    EXPECT_EQ(c.exact[2],
              oracle_max_truncated(table(), Weight::norm, Restriction::distinct, Mode::cumulative, 2, 3));
}

TEST(MaxNormStar, Telescoping) {
    EXPECT_EQ(max_norm_star(0, Mode::individual), 1);
    EXPECT_EQ(max_norm_star(1, Mode::individual), 0);
    EXPECT_EQ(max_norm_star(5, Mode::individual), 1);
    EXPECT_EQ(max_norm_star(7, Mode::cumulative), 7);
    EXPECT_EQ(max_norm_star(0, Mode::cumulative), 1);
    const auto w = max_series(table(), Weight::norm, Restriction::no_ones, 1, Mode::individual, 10'000, Backend::exact);
    const auto c = max_series(table(), Weight::norm, Restriction::no_ones, 1, Mode::cumulative, 10'000, Backend::exact);
    for (std::uint64_t n = 2; n <= 10'000; ++n) {
        ASSERT_EQ(w.exact[n], 1);
        ASSERT_EQ(c.exact[n], Rational(static_cast<long>(n)));
    }
    EXPECT_EQ(max_norm_star(10'000, Mode::cumulative), 10'000);
}
