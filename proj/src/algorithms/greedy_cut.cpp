#include <bit>
#include <vector>

#include "ehc/algorithms.hpp"

namespace ehc {

namespace {

// Range argmax over gaps, leftmost on ties.
class WidestGap {
 public:
  explicit WidestGap(std::span<const double> x) {
    const std::size_t m = x.size() - 1;
    gaps_.resize(m);
    for (std::size_t p = 0; p < m; ++p) gaps_[p] = x[p + 1] - x[p];
    table_.emplace_back(m);
    for (std::size_t p = 0; p < m; ++p) table_[0][p] = static_cast<std::uint32_t>(p);
    for (std::size_t k = 1; (std::size_t{1} << k) <= m; ++k) {
      const std::size_t half = std::size_t{1} << (k - 1);
      const auto& prev = table_[k - 1];
      std::vector<std::uint32_t> level(m - (std::size_t{1} << k) + 1);
      for (std::size_t p = 0; p < level.size(); ++p) level[p] = pick(prev[p], prev[p + half]);
      table_.push_back(std::move(level));
    }
  }

  /// Gap index in [lo, hi] with the largest width.
  std::size_t argmax(std::size_t lo, std::size_t hi) const {
    const auto k = static_cast<std::size_t>(std::bit_width(hi - lo + 1) - 1);
    return pick(table_[k][lo], table_[k][hi + 1 - (std::size_t{1} << k)]);
  }

 private:
  std::uint32_t pick(std::uint32_t a, std::uint32_t b) const {
    if (gaps_[b] > gaps_[a]) return b;
    if (gaps_[a] > gaps_[b]) return a;
    return std::min(a, b);
  }

  std::vector<double> gaps_;
  std::vector<std::vector<std::uint32_t>> table_;
};

}  // namespace

Dendrogram greedy_cut(std::span<const double> sorted_x, AlgorithmTrace* trace) {
  require_sorted(sorted_x, "greedy_cut");
  const std::size_t n = sorted_x.size();
  if (n == 0) throw std::invalid_argument("greedy_cut: no points");
  AlgorithmTrace local;
  AlgorithmTrace& out = trace ? *trace : local;
  out.merges.clear();
  out.splits.clear();
  if (n > 1) {
    const WidestGap widest(sorted_x);
    out.splits.reserve(n - 1);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{0, n}};
    while (!stack.empty()) {
      const auto [begin, end] = stack.back();
      stack.pop_back();
      if (end - begin < 2) continue;
      const std::size_t p = widest.argmax(begin, end - 2);
      out.splits.push_back({begin, end, p + 1, 0.5 * (sorted_x[p] + sorted_x[p + 1])});
      stack.emplace_back(p + 1, end);
      stack.emplace_back(begin, p + 1);
    }
  }
  return replay_splits(n, out);
}

}  // namespace ehc
