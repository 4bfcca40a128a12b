#pragma once

// Foundational types: point sets, dendrograms, LCA queries and seeded
// randomness. Everything here is immutable once built and can be shared
// read-only across threads.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ehc {

/// Thrown when a computation exceeds one of the configured size gates
/// (materialization limit, cubic-cost limit, brute-force limit).
class RefusedComputation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// n points in R^d stored row-major. n >= 1, d >= 1, all coordinates finite.
class PointSet {
 public:
  PointSet(std::size_t n, std::size_t dim, std::vector<double> coords);

  static PointSet from_rows(const std::vector<std::vector<double>>& rows);
  static PointSet from_1d(std::span<const double> xs);

  std::size_t size() const { return n_; }
  std::size_t dim() const { return dim_; }

  std::span<const double> point(std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  double coord(std::size_t i, std::size_t k) const { return coords_[i * dim_ + k]; }
  std::span<const double> coords() const { return coords_; }

  /// First `count` points, in order.
  PointSet head(std::size_t count) const;

 private:
  std::size_t n_;
  std::size_t dim_;
  std::vector<double> coords_;
};

/// 64-bit seed. Equal seeds and equal inputs give bit-identical outputs.
struct RandomSeed {
  std::uint64_t value = 0;

  /// Seed for the k-th independent repetition:
  /// splitmix64(value ^ splitmix64(k)).
  RandomSeed derive(std::uint64_t k) const;

  std::mt19937_64 engine() const { return std::mt19937_64(value); }

  friend bool operator==(RandomSeed, RandomSeed) = default;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double uniform01(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

/// Rooted binary tree over leaves labelled 0..n-1.
///
/// Nodes live in a flat array. Leaves and internal nodes share the same
/// node type; internal nodes have exactly two children and cache the number
/// of leaves beneath them.
class Dendrogram {
 public:
  using NodeId = std::uint32_t;
  static constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

  struct Node {
    NodeId left = kNoNode;
    NodeId right = kNoNode;
    NodeId parent = kNoNode;
    std::uint32_t leaf = 0;   // point index, meaningful for leaves only
    std::uint32_t count = 1;  // leaves in this subtree

    bool is_leaf() const { return left == kNoNode; }
  };

  /// Bottom-up construction. Children must exist before they are joined.
  class Builder {
   public:
    explicit Builder(std::size_t expected_leaves = 0);

    NodeId add_leaf(std::size_t point);
    NodeId join(NodeId left, NodeId right);
    std::size_t node_count() const { return nodes_.size(); }

    /// Validates the structure and freezes it. Throws std::invalid_argument
    /// when there is not exactly one root or leaf labels are not a
    /// permutation of [0, n).
    Dendrogram finish() &&;

   private:
    std::vector<Node> nodes_;
  };

  std::size_t leaf_count() const { return leaf_node_.size(); }
  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  std::span<const Node> nodes() const { return nodes_; }
  NodeId leaf_node(std::size_t point) const;

  /// Leaf labels under `from`, left to right.
  std::vector<std::size_t> leaves_under(NodeId from) const;
  std::vector<std::size_t> leaf_order() const { return leaves_under(root_); }

  /// Smallest leaf label in each subtree, indexed by node id.
  std::vector<std::uint32_t> min_leaves() const;

  /// Same shape, leaf i renamed to labels[i]. `labels` must be a permutation.
  Dendrogram relabeled(std::span<const std::size_t> labels) const;

  /// Same hierarchy with the children of every node ordered by smallest
  /// leaf label. Two trees describe the same hierarchy iff their canonical
  /// forms are structurally equal.
  Dendrogram canonical() const;

  /// Ordered structural equality (left/right orientation matters).
  friend bool operator==(const Dendrogram& a, const Dendrogram& b);

 private:
  Dendrogram(std::vector<Node> nodes, std::vector<NodeId> leaf_node, NodeId root)
      : nodes_(std::move(nodes)), leaf_node_(std::move(leaf_node)), root_(root) {}

  std::vector<Node> nodes_;
  std::vector<NodeId> leaf_node_;
  NodeId root_;
};

/// Same clusters at every level, ignoring child orientation.
bool same_hierarchy(const Dendrogram& a, const Dendrogram& b);

/// Leaf count under the least common ancestor of leaves i and j.
/// Walks parent pointers; use LcaIndex for many queries.
std::size_t lca_subtree_size(const Dendrogram& tree, std::size_t i, std::size_t j);

/// The element of {i, j, k} that is split away from the other two first
/// when walking down from the root.
std::size_t first_separated(const Dendrogram& tree, std::size_t i, std::size_t j,
                            std::size_t k);

/// Constant-time LCA queries after O(n log n) preprocessing
/// (Euler tour + sparse table over depths).
class LcaIndex {
 public:
  explicit LcaIndex(const Dendrogram& tree);

  Dendrogram::NodeId lca(std::size_t i, std::size_t j) const;
  std::size_t subtree_size(std::size_t i, std::size_t j) const {
    return tree_->node(lca(i, j)).count;
  }
  std::size_t first_separated(std::size_t i, std::size_t j, std::size_t k) const;

 private:
  const Dendrogram* tree_;
  std::vector<std::uint32_t> first_visit_;  // by leaf label
  std::vector<Dendrogram::NodeId> tour_;
  std::vector<std::uint32_t> depth_;        // along the tour
  std::vector<std::vector<std::uint32_t>> table_;  // tour positions of min depth
};

}  // namespace ehc
