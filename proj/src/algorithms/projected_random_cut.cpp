#include <algorithm>
#include <chrono>
#include <numeric>
#include <string>
#include <vector>

#include "ehc/algorithms.hpp"
#include "splits.hpp"

namespace ehc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<double> gaussian_direction(std::size_t dim, std::mt19937_64& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> g(dim);
  for (auto& c : g) c = normal(engine);
  return g;
}

std::vector<double> project(const PointSet& points, std::span<const double> direction) {
  if (direction.size() != points.dim()) {
    throw std::invalid_argument("project: direction has dimension " +
                                std::to_string(direction.size()) + ", points have " +
                                std::to_string(points.dim()));
  }
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  const double* v = points.coords().data();
  const double* g = direction.data();
  std::vector<double> x(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const double* row = v + i * d;
    double s = 0.0;
    for (std::size_t k = 0; k < d; ++k) s += row[k] * g[k];
    x[i] = s;
  }
  return x;
}

Dendrogram projected_random_cut(const PointSet& points, RandomSeed seed, PrcTimings* timings) {
  // The engine first yields the direction and then the cut positions.
  auto engine = seed.engine();
  PrcTimings local;
  PrcTimings& t = timings ? *timings : local;

  auto start = Clock::now();
  const auto direction = gaussian_direction(points.dim(), engine);
  std::vector<double> x = project(points, direction);
  t.project_seconds = seconds_since(start);

  start = Clock::now();
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  {
    std::vector<double> sorted(x.size());
    for (std::size_t p = 0; p < order.size(); ++p) sorted[p] = x[order[p]];
    x.swap(sorted);
  }
  t.sort_seconds = seconds_since(start);

  start = Clock::now();
  AlgorithmTrace trace;
  trace.splits = detail::random_splits(x, engine);
  Dendrogram tree = replay_splits(x.size(), trace, order);
  t.cut_seconds = seconds_since(start);
  return tree;
}

}  // namespace ehc
