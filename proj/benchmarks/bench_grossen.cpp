#include <benchmark/benchmark.h>

#include "grossen/cmform.hpp"
#include "grossen/survey.hpp"

using namespace grossen;

namespace {

Grossenchar char_at_dE(long D) {
  FieldE E(D);
  QIdeal m = minimal_conductor(E).d;
  EtaQuery q;
  q.weight = 1;
  return build(E, m, 1, enumerate_eta(E, m, q).at(0));
}

void BM_ClassNumberSweep(benchmark::State& st) {
  long bound = st.range(0);
  for (auto _ : st) {
    long total = 0;
    for (long D : enumerate_discriminants(bound)) total += class_number(D);
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ClassNumberSweep)->Arg(1000)->Arg(5460)->Unit(benchmark::kMillisecond);

void BM_ClassGroup(benchmark::State& st) {
  FieldE E(-st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(class_group(E));
}
BENCHMARK(BM_ClassGroup)->Arg(23)->Arg(4027)->Arg(5460);

void BM_IdealsOfNorm(benchmark::State& st) {
  FieldE E(-23);
  for (auto _ : st) benchmark::DoNotOptimize(ideals_of_norm_up_to(E, st.range(0)));
  st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_IdealsOfNorm)->RangeMultiplier(4)->Range(500, 32000)->Complexity();

void BM_QExpansion(benchmark::State& st) {
  Grossenchar psi = char_at_dE(-st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(q_expansion(psi, st.range(1)));
}
BENCHMARK(BM_QExpansion)->Args({7, 2000})->Args({23, 2000})->Args({15, 2000})->Unit(benchmark::kMillisecond);

void BM_HeckeVerify(benchmark::State& st) {
  CMForm f = q_expansion(char_at_dE(-23), st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(hecke_verify(f));
}
BENCHMARK(BM_HeckeVerify)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_UnitsStructure(benchmark::State& st) {
  FieldE E(-20);
  QIdeal P = factor_prime(E, 2).primes[0];
  QIdeal m = ideal_mul(E, ideal_pow(E, P, st.range(0)), rational_ideal(Rat(21)));
  for (auto _ : st) benchmark::DoNotOptimize(units_structure(E, m));
}
BENCHMARK(BM_UnitsStructure)->DenseRange(3, 12, 3);

void BM_Dlog(benchmark::State& st) {
  FieldE E(-23);
  UnitsStructure S = units_structure(E, rational_ideal(Rat(105)));
  QuadElem z(2, 3);  // norm 1108, prime to 105
  dlog(z, S);  // builds the lookup tables
  for (auto _ : st) benchmark::DoNotOptimize(dlog(z, S));
}
BENCHMARK(BM_Dlog);

void BM_OrderFourSearch(benchmark::State& st) {
  FieldE E(-24);
  for (auto _ : st) benchmark::DoNotOptimize(order4_search(E, st.range(0)));
}
BENCHMARK(BM_OrderFourSearch)->Arg(2000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
