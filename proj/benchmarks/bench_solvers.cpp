#include <benchmark/benchmark.h>

#include "hetsnet/baselines.hpp"
#include "hetsnet/exact.hpp"
#include "hetsnet/greedy.hpp"
#include "hetsnet/ilp.hpp"

namespace {

hetsnet::Scenario scenario_for(int num_su, int num_sbs) {
  hetsnet::NetworkConfig cfg;
  cfg.num_su = num_su;
  cfg.num_sbs = num_sbs;
  cfg.ref_distance_m = 4.0;  // keep the instances non-trivial
  hetsnet::Rng rng(2024);
  // skip macro-dead draws so build_instance has something to build
  while (true) {
    hetsnet::Scenario scn = hetsnet::sample_scenario(cfg, rng);
    if (scn.mbs_snr * scn.gain_mu_mbs() > scn.mu_threshold) return scn;
  }
}

void BM_SampleScenario(benchmark::State& state) {
  hetsnet::NetworkConfig cfg;
  cfg.num_su = static_cast<int>(state.range(0));
  cfg.num_sbs = static_cast<int>(state.range(1));
  hetsnet::Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::sample_scenario(cfg, rng));
  }
}
BENCHMARK(BM_SampleScenario)->Args({10, 10})->Args({20, 20});

void BM_BuildInstance(benchmark::State& state) {
  const auto scn = scenario_for(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::build_instance(scn));
  }
}
BENCHMARK(BM_BuildInstance)->Args({6, 6})->Args({10, 16});

void BM_BruteForce(benchmark::State& state) {
  const auto scn = scenario_for(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::solve_bf(scn));
  }
}
BENCHMARK(BM_BruteForce)->Args({4, 4})->Args({5, 5})->Args({6, 6});

void BM_BranchAndBound(benchmark::State& state) {
  const auto scn = scenario_for(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::solve_bnb(scn));
  }
}
BENCHMARK(BM_BranchAndBound)->Args({4, 4})->Args({6, 6})->Args({6, 8});

void BM_Umrcg(benchmark::State& state) {
  const auto scn = scenario_for(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::solve_umrcg(scn));
  }
}
BENCHMARK(BM_Umrcg)->Args({6, 6})->Args({10, 16})->Args({20, 20});

void BM_MaxSinr(benchmark::State& state) {
  const auto scn = scenario_for(static_cast<int>(state.range(0)),
                                static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hetsnet::solve_max_sinr(scn));
  }
}
BENCHMARK(BM_MaxSinr)->Args({10, 16});

}  // namespace

BENCHMARK_MAIN();
