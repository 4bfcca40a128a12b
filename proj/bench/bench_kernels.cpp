// Parallel kernels against their serial references.
//
//   ./bench_kernels --benchmark_filter=FPlus

#include <benchmark/benchmark.h>

#include <map>

#include "ehc/algorithms.hpp"
#include "ehc/instances.hpp"
#include "ehc/objectives.hpp"
#include "ehc/serial.hpp"

namespace {

using namespace ehc;

const PointSet& cloud(std::size_t n, std::size_t dim) {
  static std::map<std::pair<std::size_t, std::size_t>, PointSet> cache;
  const auto key = std::make_pair(n, dim);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, random_gaussian_cloud(n, dim, RandomSeed{7})).first;
  return it->second;
}

void BM_Materialize(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0});
  for (auto _ : state) benchmark::DoNotOptimize(view.materialized());
}

void BM_MaterializeSerial(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0});
  for (auto _ : state) benchmark::DoNotOptimize(serial::materialize(view));
}

void BM_FPlus(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0}).materialized();
  const auto tree = projected_random_cut(pts, RandomSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(f_plus(tree, view));
}

void BM_FPlusSerial(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0}).materialized();
  const auto tree = projected_random_cut(pts, RandomSeed{1});
  for (auto _ : state) benchmark::DoNotOptimize(serial::f_plus(tree, view));
}

void BM_MaxUpper(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0}).materialized();
  for (auto _ : state) benchmark::DoNotOptimize(max_upper(view));
}

void BM_MaxUpperSerial(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0}).materialized();
  for (auto _ : state) benchmark::DoNotOptimize(serial::max_upper(view));
}

void BM_Project(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 128);
  std::mt19937_64 engine(3);
  const auto g = gaussian_direction(pts.dim(), engine);
  for (auto _ : state) benchmark::DoNotOptimize(project(pts, g));
}

void BM_ProjectSerial(benchmark::State& state) {
  const auto& pts = cloud(static_cast<std::size_t>(state.range(0)), 128);
  std::mt19937_64 engine(3);
  const auto g = gaussian_direction(pts.dim(), engine);
  for (auto _ : state) benchmark::DoNotOptimize(serial::project(pts, g));
}

void BM_ExpectedFPlus(benchmark::State& state) {
  const auto& pts = cloud(200, 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0});
  const auto repeats = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(expected_f_plus(RandomizedAlgorithm::kProjectedRandomCut, pts, view,
                                             repeats, RandomSeed{5}));
  }
}

void BM_ExpectedFPlusSerial(benchmark::State& state) {
  const auto& pts = cloud(200, 16);
  const auto view = SimilarityView::lazy(pts, GaussianKernel{4.0});
  const auto repeats = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serial::expected_f_plus(RandomizedAlgorithm::kProjectedRandomCut,
                                                     pts, view, repeats, RandomSeed{5}));
  }
}

}  // namespace

BENCHMARK(BM_Materialize)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaterializeSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FPlus)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FPlusSerial)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxUpper)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaxUpperSerial)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Project)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ProjectSerial)->Arg(10'000)->Arg(100'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpectedFPlus)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpectedFPlusSerial)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
