#include <benchmark/benchmark.h>

#include "waring/oracle.hpp"
#include "waring/recursion.hpp"
#include "waring/search.hpp"
#include "waring/tables.hpp"

namespace {

void BM_StepSingle(benchmark::State& state) {
    const waring::DeltaState st = waring::DeltaState::seeded(20, 10, 8.5);
    const waring::StepParams p{-0.9999, 1.9998};
    for (auto _ : state) {
        auto res = waring::step_single(st, p);
        benchmark::DoNotOptimize(res.next.raw_delta);
    }
}
BENCHMARK(BM_StepSingle);

void BM_RawEval(benchmark::State& state) {
    for (auto _ : state) {
        const waring::RawStep r = waring::detail::eval_single(20, 8.5, 10, -0.9999, 1.9998);
        benchmark::DoNotOptimize(r.raw_delta);
    }
}
BENCHMARK(BM_RawEval);

void BM_OptimizeStep(benchmark::State& state) {
    const int digits = static_cast<int>(state.range(0));
    waring::SearchConfig config;
    config.variant = waring::RecursionVariant::SingleStep;
    config.digits = digits;
    const waring::DeltaState st = waring::DeltaState::seeded(12, 6, 6.1);
    std::uint64_t evals = 0;
    for (auto _ : state) {
        const waring::StepChoice c = waring::optimize_step(st, config);
        benchmark::DoNotOptimize(c.next.raw_delta);
        evals = c.evaluations;
    }
    state.counters["evals"] = static_cast<double>(evals);
}
BENCHMARK(BM_OptimizeStep)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_RunToZero(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    waring::SearchConfig config;
    config.variant = waring::RecursionVariant::SingleStep;
    config.digits = 4;
    for (auto _ : state) {
        const waring::SearchOutcome out = waring::run_to_zero(k, config);
        benchmark::DoNotOptimize(out.evaluations);
    }
}
BENCHMARK(BM_RunToZero)->Arg(8)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_ReplayAppendix(benchmark::State& state) {
    std::vector<waring::StepParams> params;
    for (const auto& row : waring::tables::appendix_block(20))
        params.push_back({row.alpha, row.tau});
    for (auto _ : state) {
        const waring::Trace t =
            waring::replay_trace(20, waring::RecursionVariant::SingleStep, params, 2);
        benchmark::DoNotOptimize(t.rows.back().delta);
    }
}
BENCHMARK(BM_ReplayAppendix);

void BM_CountAuxiliary(benchmark::State& state) {
    const long long P = state.range(0);
    for (auto _ : state) {
        const waring::CountResult r = waring::count_auxiliary(2, 2, P);
        benchmark::DoNotOptimize(r.count);
    }
}
BENCHMARK(BM_CountAuxiliary)->Arg(50)->Arg(200);

}  // namespace

BENCHMARK_MAIN();
