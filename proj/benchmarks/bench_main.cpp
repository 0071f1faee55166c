#include <benchmark/benchmark.h>

#include "supernorm/asymptotics.hpp"
#include "supernorm/enumerate.hpp"
#include "supernorm/oracle.hpp"

using namespace supernorm;

namespace {

const PrimeTable& table() {
    static const PrimeTable t = PrimeTable::build(10'000'000);
    return t;
}

void BM_Sieve(benchmark::State& state) {
    for (auto _ : state) {
        auto t = PrimeTable::build(static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(t.count());
    }
}
BENCHMARK(BM_Sieve)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000)->Unit(benchmark::kMillisecond);

void BM_SizeSeriesExact(benchmark::State& state) {
    for (auto _ : state) {
        auto s = size_series(table(), Weight::supernorm, Restriction::all, 1, state.range(0), Backend::exact);
        benchmark::DoNotOptimize(s.exact.back());
    }
}
BENCHMARK(BM_SizeSeriesExact)->Arg(30)->Arg(70)->Arg(120)->Unit(benchmark::kMillisecond);

void BM_SizeSeriesFloat(benchmark::State& state) {
    for (auto _ : state) {
        auto s = size_series(table(), Weight::supernorm, Restriction::all, 1, state.range(0), Backend::floating);
        benchmark::DoNotOptimize(s.approx.back());
    }
}
BENCHMARK(BM_SizeSeriesFloat)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

void BM_PerimeterSeriesExact(benchmark::State& state) {
    for (auto _ : state) {
        auto s = perimeter_series(table(), Weight::supernorm, Restriction::all, 1, state.range(0), Backend::exact);
        benchmark::DoNotOptimize(s.exact.back());
    }
}
BENCHMARK(BM_PerimeterSeriesExact)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_PerimeterSeriesFloat(benchmark::State& state) {
    for (auto _ : state) {
        auto s = perimeter_series(table(), Weight::supernorm, Restriction::all, 1, state.range(0), Backend::floating);
        benchmark::DoNotOptimize(s.approx.back());
    }
}
BENCHMARK(BM_PerimeterSeriesFloat)->Arg(500)->Arg(2000)->Arg(5000)->Unit(benchmark::kMillisecond);

void BM_OracleSize(benchmark::State& state) {
    const EnsembleSpec spec{Ensemble::size, Mode::individual, Restriction::all, Weight::supernorm, 1};
    for (auto _ : state) {
        auto v = oracle_series(table(), spec, state.range(0));
        benchmark::DoNotOptimize(v.back());
    }
}
BENCHMARK(BM_OracleSize)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_OraclePerimeter(benchmark::State& state) {
    const EnsembleSpec spec{Ensemble::perimeter, Mode::individual, Restriction::all, Weight::supernorm, 1};
    for (auto _ : state) {
        auto v = oracle_series(table(), spec, state.range(0));
        benchmark::DoNotOptimize(v.back());
    }
}
BENCHMARK(BM_OraclePerimeter)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_EnumerateBySize(benchmark::State& state) {
    for (auto _ : state) {
        std::uint64_t count = 0;
        for_each_partition_by_size(state.range(0), Restriction::all, [&](const Partition&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateBySize)->Arg(50)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_MertensScan(benchmark::State& state) {
    for (auto _ : state) {
        auto r = verify_mertens_bounds(table(), IntRange{kMertensThreshold, 10'000'000});
        benchmark::DoNotOptimize(r.front().worst_margin);
    }
}
BENCHMARK(BM_MertensScan)->Unit(benchmark::kMillisecond);

void BM_MaxWindow(benchmark::State& state) {
    const std::uint64_t lo = table().pi(kMertensThreshold - 1) + 1;
    for (auto _ : state) {
        auto r = mertens_window_check(table(), IntRange{lo, table().count()});
        benchmark::DoNotOptimize(r.worst_margin);
    }
}
BENCHMARK(BM_MaxWindow)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
