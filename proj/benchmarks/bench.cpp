#include <benchmark/benchmark.h>

#include "pelltriples/classgroup.hpp"
#include "pelltriples/lambdasieve.hpp"
#include "pelltriples/pell.hpp"
#include "pelltriples/scan.hpp"
#include "pelltriples/triplegroup.hpp"

using namespace pelltriples;

static void BM_LeastPell(benchmark::State& state) {
    const Int m(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(least_pell(m));
}
BENCHMARK(BM_LeastPell)->Arg(61)->Arg(109)->Arg(181);

static void BM_GroupAdd(benchmark::State& state) {
    GroupContext ctx(29);
    const PrimitiveTriple t1 = normalize(ctx, 70, 13, 99);
    const PrimitiveTriple t2 = pell_generator(ctx, 2);
    for (auto _ : state) benchmark::DoNotOptimize(add(ctx, t1, t2));
}
BENCHMARK(BM_GroupAdd);

static void BM_ScalarMul(benchmark::State& state) {
    GroupContext ctx(5);
    const PrimitiveTriple t = normalize(ctx, 2, 1, 3);
    const Int k(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(scalar_mul(ctx, k, t));
}
BENCHMARK(BM_ScalarMul)->Arg(8)->Arg(64);

static void BM_TripleClass(benchmark::State& state) {
    GroupContext ctx(29);
    const PrimitiveTriple t =
        add(ctx, normalize(ctx, 70, 13, 99), pell_generator(ctx, 2));
    for (auto _ : state) benchmark::DoNotOptimize(triple_class(ctx, t));
}
BENCHMARK(BM_TripleClass);

static void BM_ClassNumber(benchmark::State& state) {
    const Int m(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(class_number(m));
}
BENCHMARK(BM_ClassNumber)->Arg(29)->Arg(141)->Arg(199);

static void BM_LambdaPrimes(benchmark::State& state) {
    GroupContext ctx(2);
    const Int bound(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lambda_primes(ctx, bound));
}
BENCHMARK(BM_LambdaPrimes)->Arg(1000)->Arg(5000);

static void BM_LucasRank(benchmark::State& state) {
    const Int a(9);
    const Int p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(lucas_rank(a, p));
}
BENCHMARK(BM_LucasRank)->Arg(1999)->Arg(9973);

static void BM_SplittingCriterion(benchmark::State& state) {
    GroupContext ctx(2);
    const Int p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(splitting_criterion(ctx, p));
}
BENCHMARK(BM_SplittingCriterion)->Arg(41)->Arg(9973);

static void BM_SquarefreePart(benchmark::State& state) {
    const std::vector<Int> k = sqrt2_even_denominators(9);
    const Int n = k[7] * k[8];
    for (auto _ : state) benchmark::DoNotOptimize(squarefree_part(n));
}
BENCHMARK(BM_SquarefreePart);

static void BM_ReproduceTable(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(reproduce_table(7));
}
BENCHMARK(BM_ReproduceTable);

BENCHMARK_MAIN();
