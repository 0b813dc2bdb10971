#include <random>

#include <benchmark/benchmark.h>

#include "grpwild/autos.hpp"
#include "grpwild/catalog.hpp"
#include "grpwild/group_ops.hpp"
#include "grpwild/semidirect.hpp"
#include "grpwild/wildness.hpp"

using namespace grpwild;

namespace {

void BM_SdMultiply(benchmark::State& state) {
  auto g = SdGroup::build(cyclic(3), 3);
  std::mt19937_64 rng(1);
  const SdElement x = random_element(*g, rng), y = random_element(*g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(g->multiply(x, y));
}
BENCHMARK(BM_SdMultiply);

void BM_SdIndexedMul(benchmark::State& state) {
  auto g = SdGroup::build(cyclic(3), 3);
  Elem x = 12345, y = 67890;
  for (auto _ : state) {
    x = g->mul(x, y);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_SdIndexedMul);

void BM_ElementOrder(benchmark::State& state) {
  auto g = SdGroup::build(symmetric(3), 2);
  std::mt19937_64 rng(2);
  const SdElement x = random_element(*g, rng);
  for (auto _ : state) benchmark::DoNotOptimize(g->element_order(x));
}
BENCHMARK(BM_ElementOrder);

void BM_ConjugacyClasses(benchmark::State& state) {
  auto g = SdGroup::build(cyclic(3), 3);
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(conjugacy_classes(*g, threads).class_count());
}
BENCHMARK(BM_ConjugacyClasses)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_BruteForceAut(benchmark::State& state) {
  auto g = catalog_group(state.range(0) == 0 ? "S4" : "A5");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_aut(*g).size());
}
BENCHMARK(BM_BruteForceAut)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Lemma5(benchmark::State& state) {
  auto g = SdGroup::build(cyclic(3), 3);
  std::mt19937_64 rng(3);
  SdElement x;
  do {
    x = random_element(*g, rng);
  } while (x.a == kIdentity);
  for (auto _ : state) benchmark::DoNotOptimize(lemma5_conjugator(g, x).exponents);
}
BENCHMARK(BM_Lemma5);

void BM_VerifyWitness(benchmark::State& state) {
  auto g = SdGroup::build(cyclic(3), 2);
  for (auto _ : state) benchmark::DoNotOptimize(verify_p_wild(g, 2).status);
}
BENCHMARK(BM_VerifyWitness)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
