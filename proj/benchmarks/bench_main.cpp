#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>

#include "ellcirc/elliptic.hpp"
#include "ellcirc/intersection.hpp"
#include "ellcirc/measures.hpp"
#include "ellcirc/monte_carlo.hpp"

using namespace ellcirc;

static void BM_IncompleteE(benchmark::State& state) {
  double phi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(incomplete_e(phi, 0.8660254037844386));
    phi = phi > 1.5 ? 0.1 : phi + 0.01;
  }
}
BENCHMARK(BM_IncompleteE);

static void BM_Areas(benchmark::State& state) {
  const Ellipse e(2, 1);
  const double r = state.range(0) / 10.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(areas(e, r));
  }
}
BENCHMARK(BM_Areas)->Arg(3)->Arg(8)->Arg(15)->Arg(30)->Arg(50);

static void BM_InnerAreaQuadrature(benchmark::State& state) {
  const Ellipse e(2, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(signed_inner_area_quadrature(e, 1.5));
  }
}
BENCHMARK(BM_InnerAreaQuadrature);

// Poses on a ring crossing the ellipse boundary, so the grid path is taken.
static void BM_Classify(benchmark::State& state) {
  const Ellipse e(2, 1);
  double t = 0.0;
  for (auto _ : state) {
    const CenterOffset c{2.0 * std::cos(t), 1.2 * std::sin(t)};
    benchmark::DoNotOptimize(classify(e, 1.5, c));
    t += 0.001;
  }
}
BENCHMARK(BM_Classify);

static void BM_RegionCheck(benchmark::State& state) {
  const Ellipse e(2, 1);
  const RegionChecker checker(e, 0.8);
  double t = 0.0;
  for (auto _ : state) {
    const CenterOffset c{0.5 * std::cos(t), 0.3 * std::sin(t)};
    benchmark::DoNotOptimize(checker.check(c));
    t += 0.001;
  }
}
BENCHMARK(BM_RegionCheck);

static void BM_ThrowsChunk(benchmark::State& state) {
  const Ellipse e(2, 1);
  const Lattice lat{10, 10, std::numbers::pi / 2};
  MonteCarloOptions opts;
  opts.threads = 1;
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate_throws(e, 1.5, lat, 1u << 16, seed++, opts));
  }
  state.SetItemsProcessed(state.iterations() * (1 << 16));
}
BENCHMARK(BM_ThrowsChunk)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
