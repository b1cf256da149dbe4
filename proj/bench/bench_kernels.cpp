// Serial reference against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "gkd/fixtures.hpp"
#include "gkd/kernels.hpp"
#include "gkd/modrep.hpp"

namespace {

gkd::AlgebraPtr algebra(const char* name, std::uint32_t p) { return gkd::make_algebra(gkd::fixture(name, gkd::Field::prime(p))); }

void BM_AssociativitySerial(benchmark::State& s) {
  auto b = algebra("pair4", 5);
  for (auto _ : s) benchmark::DoNotOptimize(gkd::kernels::associativity_serial(*b->presentation()));
}

void BM_AssociativityParallel(benchmark::State& s) {
  auto b = algebra("pair4", 5);
  for (auto _ : s) benchmark::DoNotOptimize(gkd::kernels::associativity_parallel(*b->presentation()));
}

// Regular module of M_4(GF(2)): 2^16 seed vectors.
std::vector<gkd::kernels::ModPMatrix> regular_gens(const char* name, std::uint32_t p) {
  auto m = gkd::regular_module(algebra(name, p)->presentation());
  std::vector<gkd::kernels::ModPMatrix> gens;
  for (const auto& a : m.action()) gens.push_back(gkd::kernels::to_modp(a));
  return gens;
}

void BM_CyclicSerial(benchmark::State& s) {
  auto gens = regular_gens("pair4", 2);
  for (auto _ : s) benchmark::DoNotOptimize(gkd::kernels::cyclic_subspaces_serial(2, 16, gens));
}

void BM_CyclicParallel(benchmark::State& s) {
  auto gens = regular_gens("pair4", 2);
  for (auto _ : s) benchmark::DoNotOptimize(gkd::kernels::cyclic_subspaces_parallel(2, 16, gens));
}

}  // namespace

BENCHMARK(BM_AssociativitySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativityParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CyclicParallel)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
