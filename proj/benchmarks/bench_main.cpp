#include <benchmark/benchmark.h>

#include "topohl/game.hpp"
#include "topohl/oracle.hpp"

using namespace topohl;

namespace {

const char* kFormulas[] = {
    "~(<>'i -> 'i)",
    "<>(~'i & <>'i)",
    "~(@'i ~'j -> (@'i [] ~'j | @'j [] ~'i))",
    "<>p & <>~p & []<>q & E('i & ~q)",
    "~([](p -> q) -> ([]p -> []q))",
};

void solveT0(benchmark::State& state) {
  Formula f = parse(kFormulas[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, RepClass::T0).sat);
}

void solveT1(benchmark::State& state) {
  Formula f = parse(kFormulas[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(solve(f, RepClass::T1).sat);
}

void oracleT0(benchmark::State& state) {
  Formula f = parse(kFormulas[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(bruteForceSat(f, RepClass::T0, 3).sat());
}

void preorders(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumeratePreorders(static_cast<std::size_t>(state.range(0)), true).size());
}

}  // namespace

BENCHMARK(solveT0)->DenseRange(0, 4);
BENCHMARK(solveT1)->DenseRange(0, 4);
BENCHMARK(oracleT0)->DenseRange(0, 4);
BENCHMARK(preorders)->DenseRange(1, 5);
BENCHMARK_MAIN();
