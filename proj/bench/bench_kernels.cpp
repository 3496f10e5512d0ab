#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "gfib/modular.hpp"
#include "gfib/verifier.hpp"

namespace {

std::vector<gfib::ModQuery> random_queries(std::size_t count) {
    std::mt19937_64 rng(42);
    std::vector<gfib::ModQuery> queries(count);
    for (auto& query : queries) {
        query.p = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        query.q = static_cast<std::int64_t>(rng() % 2'000'001) - 1'000'000;
        query.n = rng() % 1'000'000'000'000'000'001ULL;
        query.m = 1 + rng() % 1'000'000'000ULL;
    }
    return queries;
}

void BM_GModBatchSerial(benchmark::State& state) {
    const auto queries = random_queries(static_cast<std::size_t>(state.range(0)));
    std::vector<std::uint64_t> out(queries.size());
    for (auto _ : state) {
        gfib::g_mod_batch_serial(queries, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GModBatchSerial)->Arg(10'000)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_GModBatchParallel(benchmark::State& state) {
    const auto queries = random_queries(10'000);
    std::vector<std::uint64_t> out(queries.size());
    for (auto _ : state) {
        gfib::g_mod_batch(queries, out, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * 10'000);
}
BENCHMARK(BM_GModBatchParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepEquivModular(benchmark::State& state) {
    gfib::SweepConfig config;
    config.n_max = 500;
    config.t_max = 500;
    config.mode = gfib::EvalMode::Modular;
    config.worker_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = gfib::verify_claim(gfib::ClaimId::Thm1_1_Equiv, config);
        benchmark::DoNotOptimize(report.points_checked);
    }
}
BENCHMARK(BM_SweepEquivModular)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SweepMultDivExact(benchmark::State& state) {
    gfib::SweepConfig config;
    config.worker_count = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto report = gfib::verify_claim(gfib::ClaimId::Thm1_1_MultDiv, config);
        benchmark::DoNotOptimize(report.points_checked);
    }
}
BENCHMARK(BM_SweepMultDivExact)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
