#include <bit>
#include <string>

#include "ehc/core.hpp"

namespace ehc {

LcaIndex::LcaIndex(const Dendrogram& tree) : tree_(&tree) {
  const auto nodes = tree.nodes();
  const std::size_t n = tree.leaf_count();
  first_visit_.assign(n, 0);
  tour_.reserve(2 * nodes.size());
  depth_.reserve(2 * nodes.size());

  // Iterative Euler tour; `next_child` records how far each node has been expanded.
  struct Frame {
    Dendrogram::NodeId id;
    std::uint32_t depth;
    std::uint8_t next_child;
  };
  std::vector<Frame> stack{{tree.root(), 0, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    const auto& nd = tree.node(f.id);
    if (f.next_child == 0) {
      if (nd.is_leaf()) first_visit_[nd.leaf] = static_cast<std::uint32_t>(tour_.size());
    }
    tour_.push_back(f.id);
    depth_.push_back(f.depth);
    if (nd.is_leaf() || f.next_child == 2) {
      stack.pop_back();
      continue;
    }
    const auto child = f.next_child == 0 ? nd.left : nd.right;
    const auto depth = f.depth + 1;
    ++f.next_child;
    stack.push_back({child, depth, 0});
  }

  const std::size_t m = tour_.size();
  const std::size_t levels = std::bit_width(m);
  table_.resize(levels);
  table_[0].resize(m);
  for (std::size_t p = 0; p < m; ++p) table_[0][p] = static_cast<std::uint32_t>(p);
  for (std::size_t lv = 1; lv < levels; ++lv) {
    const std::size_t span = std::size_t{1} << lv;
    const std::size_t half = span >> 1;
    auto& row = table_[lv];
    const auto& prev = table_[lv - 1];
    row.resize(m - span + 1);
    for (std::size_t p = 0; p + span <= m; ++p) {
      const auto a = prev[p];
      const auto b = prev[p + half];
      row[p] = depth_[a] <= depth_[b] ? a : b;
    }
  }
}

Dendrogram::NodeId LcaIndex::lca(std::size_t i, std::size_t j) const {
  const std::size_t n = first_visit_.size();
  if (i >= n || j >= n) {
    throw std::out_of_range("LcaIndex: leaf index out of range for " + std::to_string(n) +
                            " leaves");
  }
  std::size_t lo = first_visit_[i];
  std::size_t hi = first_visit_[j];
  if (lo > hi) std::swap(lo, hi);
  const std::size_t len = hi - lo + 1;
  const std::size_t lv = std::bit_width(len) - 1;
  const auto a = table_[lv][lo];
  const auto b = table_[lv][hi + 1 - (std::size_t{1} << lv)];
  return tour_[depth_[a] <= depth_[b] ? a : b];
}

std::size_t LcaIndex::first_separated(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("first_separated: indices must be distinct");
  }
  const auto ij = subtree_size(i, j);
  const auto ik = subtree_size(i, k);
  const auto jk = subtree_size(j, k);
  if (ij < ik && ij < jk) return k;
  if (ik < ij && ik < jk) return j;
  return i;
}

}  // namespace ehc
