#include <string>
#include <vector>

#include "ehc/algorithms.hpp"

namespace ehc {

Dendrogram replay_merges(std::size_t n, const AlgorithmTrace& trace) {
  if (n == 0) throw std::invalid_argument("replay_merges: no leaves");
  if (trace.merges.size() != n - 1) {
    throw std::invalid_argument("replay_merges: expected " + std::to_string(n - 1) +
                                " merges, got " + std::to_string(trace.merges.size()));
  }
  Dendrogram::Builder builder(n);
  for (std::size_t i = 0; i < n; ++i) builder.add_leaf(i);
  for (const auto& m : trace.merges) {
    const auto id = builder.join(m.left, m.right);
    if (id != m.merged) {
      throw std::invalid_argument("replay_merges: merge produced node " + std::to_string(id) +
                                  " but the trace says " + std::to_string(m.merged));
    }
  }
  return std::move(builder).finish();
}

Dendrogram replay_splits(std::size_t n, const AlgorithmTrace& trace,
                         std::span<const std::size_t> labels) {
  if (n == 0) throw std::invalid_argument("replay_splits: no leaves");
  if (!labels.empty() && labels.size() != n) {
    throw std::invalid_argument("replay_splits: label count does not match n");
  }
  const auto& splits = trace.splits;
  if (splits.size() != n - 1) {
    throw std::invalid_argument("replay_splits: expected " + std::to_string(n - 1) +
                                " splits, got " + std::to_string(splits.size()));
  }

  // Walk the preorder list once to pair every split with its children. A
  // child is either a later split (index into `splits`) or a single leaf.
  struct Child {
    bool is_leaf;
    std::size_t index;  // split index, or sorted leaf position
  };
  std::vector<Child> left(splits.size());
  std::vector<Child> right(splits.size());
  struct Pending {
    std::size_t begin, end;
    std::size_t parent;  // split index; unused for the root
    bool is_left;
  };
  std::vector<Pending> stack{{0, n, 0, true}};
  std::size_t next = 0;
  bool root_done = false;
  while (!stack.empty()) {
    const Pending p = stack.back();
    stack.pop_back();
    Child child{true, p.begin};
    if (p.end - p.begin > 1) {
      if (next >= splits.size()) throw std::invalid_argument("replay_splits: trace too short");
      const auto& s = splits[next];
      if (s.begin != p.begin || s.end != p.end || s.cut <= s.begin || s.cut >= s.end) {
        throw std::invalid_argument("replay_splits: split " + std::to_string(next) +
                                    " does not match the pending interval");
      }
      child = {false, next};
      stack.push_back({s.cut, s.end, next, false});
      stack.push_back({s.begin, s.cut, next, true});
      ++next;
    }
    if (!root_done) {
      root_done = true;
      continue;
    }
    (p.is_left ? left : right)[p.parent] = child;
  }

  // Children follow their parent in preorder, so building in reverse
  // preorder sees every child before its parent.
  Dendrogram::Builder builder(n);
  std::vector<Dendrogram::NodeId> node_of(splits.size());
  auto materialize = [&](const Child& c) {
    if (!c.is_leaf) return node_of[c.index];
    return builder.add_leaf(labels.empty() ? c.index : labels[c.index]);
  };
  if (n == 1) {
    builder.add_leaf(labels.empty() ? 0 : labels[0]);
    return std::move(builder).finish();
  }
  for (std::size_t s = splits.size(); s-- > 0;) {
    const auto l = materialize(left[s]);
    const auto r = materialize(right[s]);
    node_of[s] = builder.join(l, r);
  }
  return std::move(builder).finish();
}

}  // namespace ehc
