// Serial reference kernels against their OpenMP counterparts.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "attsync/controller.hpp"
#include "attsync/graph.hpp"
#include "attsync/scenario.hpp"
#include "attsync/simulator.hpp"

namespace {

using namespace attsync;

Graph ring(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= n; ++i) edges.emplace_back(i, i % n + 1);
  return Graph::from_edges(n, std::move(edges));
}

StackedVec3 random_state(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  StackedVec3 x(n);
  for (auto& xi : x) xi = Vec3(u(rng), u(rng), u(rng));
  return x;
}

void BM_control_input_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = ring(n);
  const StackedVec3 x = random_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(control_input(x, g, SignMode::deadband(1e-3)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_control_input_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = ring(n);
  const StackedVec3 x = random_state(n);
  for (auto _ : state) benchmark::DoNotOptimize(control_input_parallel(x, g, SignMode::deadband(1e-3)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

std::vector<SimConfig> batch(std::size_t runs) {
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  std::vector<SimConfig> out;
  for (std::size_t k = 0; k < runs; ++k) {
    SimConfig c;
    c.graph = reference_topology();
    c.initial_state = NetworkState(generate_initial_state(5, {derive_seed(11, k), pi2, 0.9}));
    c.t_max = 2.0;
    c.record_stride = 100;
    out.push_back(std::move(c));
  }
  return out;
}

void BM_simulate_batch_serial(benchmark::State& state) {
  const auto configs = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_batch_serial(configs, std::numbers::pi * std::numbers::pi));
}

void BM_simulate_batch_parallel(benchmark::State& state) {
  const auto configs = batch(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_batch(configs, std::numbers::pi * std::numbers::pi));
}

}  // namespace

BENCHMARK(BM_control_input_serial)->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_control_input_parallel)->RangeMultiplier(8)->Range(64, 32768);
BENCHMARK(BM_simulate_batch_serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_simulate_batch_parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
