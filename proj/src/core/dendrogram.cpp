#include <algorithm>
#include <string>
#include <utility>

#include "ehc/core.hpp"

namespace ehc {

Dendrogram::Builder::Builder(std::size_t expected_leaves) {
  if (expected_leaves > 0) nodes_.reserve(2 * expected_leaves - 1);
}

Dendrogram::NodeId Dendrogram::Builder::add_leaf(std::size_t point) {
  if (point >= kNoNode) throw std::out_of_range("Dendrogram: leaf index too large");
  Node leaf;
  leaf.leaf = static_cast<std::uint32_t>(point);
  nodes_.push_back(leaf);
  return static_cast<NodeId>(nodes_.size() - 1);
}

Dendrogram::NodeId Dendrogram::Builder::join(NodeId left, NodeId right) {
  if (left >= nodes_.size() || right >= nodes_.size()) {
    throw std::out_of_range("Dendrogram: join of unknown node");
  }
  if (left == right) throw std::invalid_argument("Dendrogram: cannot join a node with itself");
  if (nodes_[left].parent != kNoNode || nodes_[right].parent != kNoNode) {
    throw std::invalid_argument("Dendrogram: node already has a parent");
  }
  Node parent;
  parent.left = left;
  parent.right = right;
  parent.count = nodes_[left].count + nodes_[right].count;
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_[left].parent = id;
  nodes_[right].parent = id;
  nodes_.push_back(parent);
  return id;
}

Dendrogram Dendrogram::Builder::finish() && {
  if (nodes_.empty()) throw std::invalid_argument("Dendrogram: empty tree");
  NodeId root = kNoNode;
  std::size_t leaves = 0;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].parent == kNoNode) {
      if (root != kNoNode) throw std::invalid_argument("Dendrogram: more than one root");
      root = static_cast<NodeId>(id);
    }
    if (nodes_[id].is_leaf()) ++leaves;
  }
  std::vector<NodeId> leaf_node(leaves, kNoNode);
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (!nodes_[id].is_leaf()) continue;
    const auto label = nodes_[id].leaf;
    if (label >= leaves) {
      throw std::invalid_argument("Dendrogram: leaf label " + std::to_string(label) +
                                  " outside [0, " + std::to_string(leaves) + ")");
    }
    if (leaf_node[label] != kNoNode) {
      throw std::invalid_argument("Dendrogram: duplicate leaf label " + std::to_string(label));
    }
    leaf_node[label] = static_cast<NodeId>(id);
  }
  return Dendrogram(std::move(nodes_), std::move(leaf_node), root);
}

Dendrogram::NodeId Dendrogram::leaf_node(std::size_t point) const {
  if (point >= leaf_node_.size()) {
    throw std::out_of_range("Dendrogram: leaf index " + std::to_string(point) +
                            " out of range");
  }
  return leaf_node_[point];
}

std::vector<std::size_t> Dendrogram::leaves_under(NodeId from) const {
  std::vector<std::size_t> out;
  out.reserve(nodes_[from].count);
  std::vector<NodeId> stack{from};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) {
      out.push_back(nd.leaf);
    } else {
      stack.push_back(nd.right);
      stack.push_back(nd.left);
    }
  }
  return out;
}

std::vector<std::uint32_t> Dendrogram::min_leaves() const {
  // Builder guarantees children precede parents in the node array.
  std::vector<std::uint32_t> mins(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& nd = nodes_[id];
    mins[id] = nd.is_leaf() ? nd.leaf : std::min(mins[nd.left], mins[nd.right]);
  }
  return mins;
}

Dendrogram Dendrogram::relabeled(std::span<const std::size_t> labels) const {
  if (labels.size() != leaf_count()) {
    throw std::invalid_argument("Dendrogram::relabeled: label count mismatch");
  }
  Builder b(leaf_count());
  std::vector<NodeId> map(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& nd = nodes_[id];
    map[id] = nd.is_leaf() ? b.add_leaf(labels[nd.leaf]) : b.join(map[nd.left], map[nd.right]);
  }
  return std::move(b).finish();
}

Dendrogram Dendrogram::canonical() const {
  const auto mins = min_leaves();
  Builder b(leaf_count());
  std::vector<NodeId> map(nodes_.size());
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    const Node& nd = nodes_[id];
    if (nd.is_leaf()) {
      map[id] = b.add_leaf(nd.leaf);
    } else if (mins[nd.left] < mins[nd.right]) {
      map[id] = b.join(map[nd.left], map[nd.right]);
    } else {
      map[id] = b.join(map[nd.right], map[nd.left]);
    }
  }
  return std::move(b).finish();
}

bool operator==(const Dendrogram& a, const Dendrogram& b) {
  if (a.leaf_count() != b.leaf_count()) return false;
  std::vector<std::pair<Dendrogram::NodeId, Dendrogram::NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.is_leaf() != ny.is_leaf() || nx.count != ny.count) return false;
    if (nx.is_leaf()) {
      if (nx.leaf != ny.leaf) return false;
    } else {
      stack.emplace_back(nx.left, ny.left);
      stack.emplace_back(nx.right, ny.right);
    }
  }
  return true;
}

bool same_hierarchy(const Dendrogram& a, const Dendrogram& b) {
  return a.canonical() == b.canonical();
}

namespace {

void check_leaf(const Dendrogram& tree, std::size_t i) {
  if (i >= tree.leaf_count()) {
    throw std::out_of_range("leaf index " + std::to_string(i) + " out of range for " +
                            std::to_string(tree.leaf_count()) + " leaves");
  }
}

}  // namespace

std::size_t lca_subtree_size(const Dendrogram& tree, std::size_t i, std::size_t j) {
  check_leaf(tree, i);
  check_leaf(tree, j);
  if (i == j) throw std::invalid_argument("lca_subtree_size: i and j must differ");
  // Ancestors have strictly larger leaf counts, so climb from the smaller side.
  auto a = tree.leaf_node(i);
  auto b = tree.leaf_node(j);
  while (a != b) {
    if (tree.node(a).count <= tree.node(b).count) {
      a = tree.node(a).parent;
    } else {
      b = tree.node(b).parent;
    }
  }
  return tree.node(a).count;
}

std::size_t first_separated(const Dendrogram& tree, std::size_t i, std::size_t j,
                            std::size_t k) {
  check_leaf(tree, i);
  check_leaf(tree, j);
  check_leaf(tree, k);
  if (i == j || j == k || i == k) {
    throw std::invalid_argument("first_separated: indices must be distinct");
  }
  const auto ij = lca_subtree_size(tree, i, j);
  const auto ik = lca_subtree_size(tree, i, k);
  const auto jk = lca_subtree_size(tree, j, k);
  if (ij < ik && ij < jk) return k;
  if (ik < ij && ik < jk) return j;
  return i;
}

}  // namespace ehc
