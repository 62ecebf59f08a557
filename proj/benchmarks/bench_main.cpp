#include <benchmark/benchmark.h>

#include "zz/generators.hpp"
#include "zz/labeling.hpp"
#include "zz/spectral.hpp"
#include "zz/tower.hpp"
#include "zz/zigzag.hpp"

namespace {

zz::HLabeling centre_labeling(std::size_t n) {
  return zz::HLabeling::constant(zz::gen::cycle(n), zz::gen::path(3), zz::VertexId(1));
}

void BM_ProductCycle(benchmark::State& state) {
  auto a = centre_labeling(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    zz::ZigZagGraph z(a);
    benchmark::DoNotOptimize(z.product().edge_count());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProductCycle)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_ProductHypercubeByComplete(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  auto a = zz::HLabeling::constant(zz::gen::hypercube(d), zz::gen::complete(5), zz::VertexId(0));
  for (auto _ : state) {
    zz::ZigZagGraph z(a);
    benchmark::DoNotOptimize(z.product().edge_count());
  }
}
BENCHMARK(BM_ProductHypercubeByComplete)->DenseRange(4, 10, 2);

void BM_AdjacencySpectrum(benchmark::State& state) {
  zz::ZigZagGraph z(centre_labeling(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(zz::adjacency_spectrum(z.product()).rho);
}
BENCHMARK(BM_AdjacencySpectrum)->RangeMultiplier(2)->Range(16, 512)->Unit(benchmark::kMillisecond);

void BM_LaplacianSpectrum(benchmark::State& state) {
  zz::ZigZagGraph z(centre_labeling(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(zz::normalized_laplacian_spectrum(z.product()).rho);
}
BENCHMARK(BM_LaplacianSpectrum)->RangeMultiplier(2)->Range(16, 512)->Unit(benchmark::kMillisecond);

void BM_PiCoverCheck(benchmark::State& state) {
  zz::ZigZagGraph z(centre_labeling(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(zz::pi_combinatorial_cover_check(z).ok());
}
BENCHMARK(BM_PiCoverCheck)->RangeMultiplier(4)->Range(16, 4096);

void BM_Tower(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  auto a = centre_labeling(4);
  for (auto _ : state) {
    auto t = zz::build_tower(a.base(), a.labels(), a, depth);
    benchmark::DoNotOptimize(zz::tower_spectrum_check(t).all_passed());
  }
}
BENCHMARK(BM_Tower)->DenseRange(2, 9)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
