#include <benchmark/benchmark.h>

#include "k3lm/k3lm.hpp"

namespace {

using namespace k3lm;

PicardLattice rank2() {
  return PicardLattice::create({{2, 3}, {3, 4}}, DivClass{-4, -2});
}

PicardLattice rank3() {
  return PicardLattice::create({{0, 1, 0}, {1, 0, 0}, {0, 0, -2}}, DivClass{3, 4, 1});
}

void BM_SliceEnumeration(benchmark::State& state) {
  const auto lat = rank3();
  SliceEnumerator slices(lat, lat.polarization());
  const BigInt degree = state.range(0);
  const BigInt min_square = -2 * degree * degree;
  for (auto _ : state) {
    benchmark::DoNotOptimize(slices.enumerate(degree, min_square));
  }
}
BENCHMARK(BM_SliceEnumeration)->Arg(4)->Arg(8)->Arg(16);

// A fresh oracle per iteration keeps the memo tables cold.
void BM_RootEnumeration(benchmark::State& state) {
  const auto lat = rank3();
  const BigInt cap = state.range(0);
  for (auto _ : state) {
    ConeOracle oracle(lat);
    benchmark::DoNotOptimize(oracle.irreducible_roots_up_to(cap));
  }
}
BENCHMARK(BM_RootEnumeration)->Arg(8)->Arg(24)->Arg(48);

void BM_DestabilizerScan(benchmark::State& state) {
  const auto lat = rank2();
  const BigInt d = state.range(0);
  for (auto _ : state) {
    ConeOracle oracle(lat);
    benchmark::DoNotOptimize(destabilizer_scan(oracle, lm_invariants(oracle, lat.polarization(), d)));
  }
}
BENCHMARK(BM_DestabilizerScan)->Arg(10)->Arg(30)->Arg(49)->Unit(benchmark::kMillisecond);

void BM_CliffordIndex(benchmark::State& state) {
  const auto lat = PicardLattice::create({{2}}, DivClass{state.range(0)});
  for (auto _ : state) {
    ConeOracle oracle(lat);
    benchmark::DoNotOptimize(clifford_index(oracle, lat.polarization()));
  }
}
BENCHMARK(BM_CliffordIndex)->Arg(3)->Arg(6)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
