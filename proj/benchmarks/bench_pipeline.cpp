#include <memory>

#include <benchmark/benchmark.h>

#include "affstr/oracle.hpp"
#include "affstr/strings.hpp"

using namespace affstr;

namespace {

const AlgebraSpec& a2()
{
    static const AlgebraSpec spec = AlgebraSpec::preset("A2");
    return spec;
}

BaseWeightSet level_four_class()
{
    const std::vector<Rational> zero(2, Rational(0));
    return enumerate_class_weights(a2(), 4).at(congruence_class(a2(), zero));
}

} // namespace

static void BM_BuildFan(benchmark::State& state)
{
    const long cutoff = state.range(0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_fan(a2(), cutoff));
    }
}
BENCHMARK(BM_BuildFan)->Arg(3)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_BuildFanA3(benchmark::State& state)
{
    const auto a3 = AlgebraSpec::preset("A3");
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_fan(a3, state.range(0)));
    }
}
BENCHMARK(BM_BuildFanA3)->Arg(2)->Arg(5)->Unit(benchmark::kMillisecond);

static void BM_FoldLevelFour(benchmark::State& state)
{
    const auto base = level_four_class();
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_folded_fans(a2(), base, state.range(0)));
    }
}
BENCHMARK(BM_FoldLevelFour)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_SolveLevelFour(benchmark::State& state)
{
    const auto base = level_four_class();
    const long depth = state.range(0);
    const auto fans = build_folded_fans(a2(), base, depth);
    for (auto _ : state) {
        const auto system = assemble_system(base, fans.folded, 1, depth);
        benchmark::DoNotOptimize(solve_strings(a2(), base, system));
    }
}
BENCHMARK(BM_SolveLevelFour)->Arg(9)->Arg(15)->Unit(benchmark::kMillisecond);

static void BM_Pipeline(benchmark::State& state)
{
    const std::vector<Rational> mu(2, Rational(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(compute_strings(a2(), state.range(0), mu, 9));
    }
}
BENCHMARK(BM_Pipeline)->Arg(1)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_RacahOracle(benchmark::State& state)
{
    const long depth = state.range(0);
    const auto fan = std::make_shared<const Fan>(build_fan(a2(), depth));
    const auto base = level_four_class();
    for (auto _ : state) {
        RacahOracle oracle(a2(), base.weights[1], fan);
        for (const auto& xi : base.weights) {
            auto w = xi;
            w.grade = -depth;
            benchmark::DoNotOptimize(oracle.multiplicity(w));
        }
    }
}
BENCHMARK(BM_RacahOracle)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
