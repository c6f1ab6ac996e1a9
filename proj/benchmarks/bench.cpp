#include <benchmark/benchmark.h>

#include "stein/counts.hpp"
#include "stein/oracle.hpp"
#include "stein/symfun.hpp"
#include "stein/weyl.hpp"

using namespace stein;

static void BM_enumerate_weyl_F4(benchmark::State& state) {
  RootSystem rs = build_root_system(ReductiveDatum::parse("F4"));
  for (auto _ : state) {
    WeylGroup W = WeylGroup::enumerate(rs);
    benchmark::DoNotOptimize(W.size());
  }
}
BENCHMARK(BM_enumerate_weyl_F4);

static void BM_steinberg_counts_A3(benchmark::State& state) {
  for (auto _ : state) {
    CountEngine e(ReductiveDatum::parse("A3"));
    QPoly acc;
    for (SimpleSubset J1 : all_subsets(e.simple_mask()))
      for (SimpleSubset J2 : all_subsets(e.simple_mask())) acc += e.st_count(J1, J2);
    benchmark::DoNotOptimize(acc.degree());
  }
}
BENCHMARK(BM_steinberg_counts_A3);

static void BM_brute_force_steinberg_GL3(benchmark::State& state) {
  for (auto _ : state) {
    Int v = oracle::st_count(3, 2, 0b00, 0b00);
    benchmark::DoNotOptimize(v.get_si());
  }
}
BENCHMARK(BM_brute_force_steinberg_GL3);

static void BM_omega_series_GL2(benchmark::State& state) {
  for (auto _ : state) {
    BiSeries om = omega_series(2, 3);
    benchmark::DoNotOptimize(om.coeffs.size());
  }
}
BENCHMARK(BM_omega_series_GL2);

static void BM_exp_side_degree3(benchmark::State& state) {
  for (auto _ : state) {
    auto es = exp_side(3, 4);
    benchmark::DoNotOptimize(es.size());
  }
}
BENCHMARK(BM_exp_side_degree3);

BENCHMARK_MAIN();
