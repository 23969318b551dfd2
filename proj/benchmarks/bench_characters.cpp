// Benchmarks for the main computational kernels: fermionic character sums,
// brute-force oracles, Cartan-matrix multiplicity tables, and the exact
// integer-point enumerator they all rest on.

#include <benchmark/benchmark.h>

#include "twistchar/characters.hpp"
#include "twistchar/kacmoody.hpp"
#include "twistchar/oracle.hpp"
#include "twistchar/quadform.hpp"

namespace {

using namespace twistchar;

ModelParams make(int l, int k, long trunc) {
  ModelParams p;
  p.l = l;
  p.k = k;
  p.trunc = rat(trunc);
  return p;
}

void BM_CharPrincipal(benchmark::State& state) {
  ModelParams p = make(1, 2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_principal(p));
}
BENCHMARK(BM_CharPrincipal)->Arg(4)->Arg(8);

void BM_CharPrincipalRankTwo(benchmark::State& state) {
  ModelParams p = make(2, 2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_principal(p));
}
BENCHMARK(BM_CharPrincipalRankTwo)->Arg(4);

void BM_CharStandard(benchmark::State& state) {
  ModelParams p = make(2, 1, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(char_standard(p));
}
BENCHMARK(BM_CharStandard)->Arg(4);

void BM_OraclePrincipal(benchmark::State& state) {
  ModelParams p = make(1, 2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_principal(p));
}
BENCHMARK(BM_OraclePrincipal)->Arg(4)->Arg(6);

void BM_OracleStandard(benchmark::State& state) {
  ModelParams p = make(1, 2, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_standard(p));
}
BENCHMARK(BM_OracleStandard)->Arg(4);

void BM_KacMoodyTable(benchmark::State& state) {
  for (auto _ : state) {
    KacMoodyTable table(1, 1, state.range(0));
    benchmark::DoNotOptimize(table.weight_table().size());
  }
}
BENCHMARK(BM_KacMoodyTable)->Arg(8)->Arg(12);

void BM_EnumerateQuadraticPoints(benchmark::State& state) {
  AffineQuadratic q{folded_gram(3), {}, 0};
  Rational bound = rat(state.range(0));
  for (auto _ : state) {
    long long count = 0;
    enumerate_integer_points(q, bound, [&](const std::vector<long>&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_EnumerateQuadraticPoints)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
