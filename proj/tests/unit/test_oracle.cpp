#include <gtest/gtest.h>

#include <cmath>

#include "reference.hpp"
#include "supernorm/enumerate.hpp"
#include "supernorm/errors.hpp"
#include "supernorm/oracle.hpp"

using namespace supernorm;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(100'000);
    return t;
}

EnsembleSpec spec(Ensemble e, Weight w, Mode m, Restriction r = Restriction::all, double beta = 1) {
    return EnsembleSpec{e, m, r, w, beta};
}

}  // namespace

TEST(Oracle, HandValues) {
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::individual), 3), Rational(11, 6));
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::size, Weight::supernorm, Mode::individual), 3),
              Rational(59, 120));
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::perimeter, Weight::supernorm, Mode::individual), 2),
              Rational(7, 12));
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::size, Weight::supernorm, Mode::cumulative), 2),
              Rational(25, 12));
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::cumulative, Restriction::no_ones), 3),
              Rational(11, 6));
}

TEST(Oracle, BaseCases) {
    const auto size = oracle_series(table(), spec(Ensemble::size, Weight::norm, Mode::individual), 2);
    EXPECT_EQ(size[0], 1);
    const auto per = oracle_series(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual), 2);
    EXPECT_EQ(per[0], 0);
    const auto per_c = oracle_series(table(), spec(Ensemble::perimeter, Weight::norm, Mode::cumulative), 2);
    EXPECT_EQ(per_c[0], 1);
    EXPECT_EQ(per_c[1], 2);
}

TEST(Oracle, MatchesReferenceImplementation) {
    using reference::Kind;
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        const Kind kind = e == Ensemble::size ? Kind::size : Kind::perimeter;
        for (Weight w : {Weight::norm, Weight::supernorm}) {
            for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
                for (int beta : {1, 2}) {
                    const int nmax = 11;
                    const auto ind = oracle_series(table(), spec(e, w, Mode::individual, r, beta), nmax);
                    const auto cum = oracle_series(table(), spec(e, w, Mode::cumulative, r, beta), nmax);
                    const int lo = r == Restriction::no_ones ? 2 : 1;
                    const bool distinct = r == Restriction::distinct;
                    const bool sn = w == Weight::supernorm;
                    for (int n = 1; n <= nmax; ++n) {
                        ASSERT_EQ(ind[n], reference::individual(kind, sn, lo, distinct, beta, n))
                            << describe(spec(e, w, Mode::individual, r, beta)) << " n=" << n;
                        ASSERT_EQ(cum[n], reference::cumulative(kind, sn, lo, distinct, beta, n))
                            << describe(spec(e, w, Mode::cumulative, r, beta)) << " n=" << n;
                    }
                }
            }
        }
    }
}

TEST(Oracle, BetaZeroCounts) {
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        for (Restriction r : {Restriction::all, Restriction::no_ones, Restriction::distinct}) {
            const auto s = spec(e, Weight::supernorm, Mode::individual, r, 0);
            const auto values = oracle_series(table(), s, 12);
            for (std::uint64_t n = 1; n <= 12; ++n) ASSERT_EQ(values[n], *ensemble_count(s, n));
        }
    }
}

TEST(Oracle, NegativeBetaIsExact) {
    // beta = -1 sums the norms themselves: 3 + 2 + 1 at size 3.
    EXPECT_EQ(oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::individual, Restriction::all, -1), 3),
              6);
}

TEST(Oracle, PerimeterNormAtMostN) {
    const auto v = oracle_series(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual), 20);
    for (std::uint64_t n = 1; n <= 20; ++n) ASSERT_LE(v[n], Rational(static_cast<long>(n))) << n;
}

TEST(Oracle, NormIdentities) {
    for (Ensemble e : {Ensemble::size, Ensemble::perimeter}) {
        const auto w = oracle_series(table(), spec(e, Weight::norm, Mode::individual), 20);
        const auto c = oracle_series(table(), spec(e, Weight::norm, Mode::cumulative, Restriction::no_ones), 20);
        for (std::uint64_t n = 1; n <= 20; ++n) ASSERT_EQ(w[n], c[n]) << name(e) << " n=" << n;
    }
}

TEST(Oracle, RejectsUnsupported) {
    EXPECT_THROW(oracle_stat(table(), spec(Ensemble::max_part, Weight::supernorm, Mode::individual), 3),
                 unsupported_error);
    EXPECT_THROW(
        oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::individual, Restriction::all, 0.5), 3),
        unsupported_error);
    EXPECT_THROW(oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::individual), 31), resource_error);
    EXPECT_THROW(oracle_stat(table(), spec(Ensemble::perimeter, Weight::norm, Mode::individual), 23),
                 resource_error);
    EXPECT_NO_THROW(oracle_stat(table(), spec(Ensemble::size, Weight::norm, Mode::individual), 32,
                                OracleOptions{true}));
}

TEST(OracleFloat, AgreesWithExactAndTakesRealBeta) {
    const auto s = spec(Ensemble::perimeter, Weight::supernorm, Mode::cumulative, Restriction::all, 1);
    const auto exact = oracle_series(table(), s, 12);
    const auto approx = oracle_series_float(table(), s, 12);
    for (std::uint64_t n = 0; n <= 12; ++n) ASSERT_NEAR(approx[n], to_double(exact[n]), 1e-13 * approx[n]);
    const auto half = oracle_series_float(
        table(), spec(Ensemble::size, Weight::norm, Mode::individual, Restriction::all, 0.5), 3);
    EXPECT_NEAR(half[3], 1 / std::sqrt(3.0) + 1 / std::sqrt(2.0) + 1, 1e-15);
}

TEST(OracleMax, GeometricSeries) {
    // Parts <= 1 with supernorm: sum_{k<=20} 2^-k.
    EXPECT_EQ(oracle_max_truncated(table(), Weight::supernorm, Restriction::all, Mode::cumulative, 1, 20),
              Rational(2) - Rational(1, 1 << 20));
    EXPECT_EQ(oracle_max_truncated(table(), Weight::supernorm, Restriction::all, Mode::individual, 1, 10),
              Rational(1) - Rational(1, 1 << 10));
    EXPECT_EQ(oracle_max_truncated(table(), Weight::norm, Restriction::no_ones, Mode::individual, 2, 40),
              Rational(1) - Rational(1, 1 << 20));
    EXPECT_THROW(oracle_max_truncated(table(), Weight::norm, Restriction::all, Mode::individual, 2, 10),
                 unsupported_error);
}

TEST(OracleMax, NondecreasingInCutoff) {
    for (std::uint64_t n = 1; n <= 4; ++n) {
        Rational prev = -1;
        for (std::uint64_t cut = 0; cut <= 30; ++cut) {
            const auto v = oracle_max_truncated(table(), Weight::supernorm, Restriction::all, Mode::individual, n, cut);
            ASSERT_GE(v, prev);
            prev = v;
        }
    }
}
