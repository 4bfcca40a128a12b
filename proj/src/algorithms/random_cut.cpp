#include <algorithm>
#include <numeric>
#include <vector>

#include "ehc/algorithms.hpp"
#include "splits.hpp"

namespace ehc {

namespace detail {

// The draw order is part of the determinism contract.
std::vector<SplitStep> random_splits(std::span<const double> x, std::mt19937_64& engine) {
  const std::size_t n = x.size();
  std::vector<SplitStep> splits;
  splits.reserve(n > 0 ? n - 1 : 0);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n}};
  while (!stack.empty()) {
    const auto [begin, end] = stack.back();
    stack.pop_back();
    if (end - begin < 2) continue;
    const double lo = x[begin];
    const double hi = x[end - 1];
    SplitStep step{begin, end, begin + 1, lo};
    if (lo < hi) {
      // r == hi would put every point on the left; redraw (measure zero).
      for (;;) {
        const double r = lo + uniform01(engine) * (hi - lo);
        const auto cut = static_cast<std::size_t>(
            std::upper_bound(x.begin() + begin, x.begin() + end, r) - x.begin());
        if (cut < end) {
          step.cut = cut;
          step.threshold = r;
          break;
        }
      }
    }
    splits.push_back(step);
    stack.emplace_back(step.cut, end);
    stack.emplace_back(begin, step.cut);
  }
  return splits;
}

}  // namespace detail

Dendrogram random_cut(std::span<const double> sorted_x, RandomSeed seed, AlgorithmTrace* trace) {
  require_sorted(sorted_x, "random_cut");
  if (sorted_x.empty()) throw std::invalid_argument("random_cut: no points");
  auto engine = seed.engine();
  AlgorithmTrace local;
  AlgorithmTrace& out = trace ? *trace : local;
  out.merges.clear();
  out.splits = detail::random_splits(sorted_x, engine);
  return replay_splits(sorted_x.size(), out);
}

Dendrogram random_cut_points(const PointSet& points, RandomSeed seed) {
  if (points.dim() != 1) {
    throw std::invalid_argument("random_cut_points: points must be one-dimensional");
  }
  const auto xs = points.coords();
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> sorted(xs.size());
  for (std::size_t p = 0; p < order.size(); ++p) sorted[p] = xs[order[p]];
  auto engine = seed.engine();
  AlgorithmTrace trace;
  trace.splits = detail::random_splits(sorted, engine);
  return replay_splits(sorted.size(), trace, order);
}

}  // namespace ehc
