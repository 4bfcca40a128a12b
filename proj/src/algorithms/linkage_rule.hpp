#pragma once

// Cluster bookkeeping shared by the fast and the reference linkage loops,
// so that both see bit-identical criterion values.

#include <algorithm>
#include <vector>

#include "ehc/algorithms.hpp"

namespace ehc::detail {

enum class LinkageRule { kAverage, kSingle };

/// (v, a, b) beats (bv, ba, bb) if v is larger, or equal with the smaller
/// unordered pair (min, max) of slots.
inline bool better(double v, std::size_t a, std::size_t b, double bv, std::size_t ba,
                   std::size_t bb) {
  if (v != bv) return v > bv;
  const auto lo = std::min(a, b), hi = std::max(a, b);
  const auto blo = std::min(ba, bb), bhi = std::max(ba, bb);
  return lo < blo || (lo == blo && hi < bhi);
}

class ClusterState {
 public:
  ClusterState(const SimilarityView& sim, LinkageRule rule)
      : n_(sim.size()), rule_(rule), alive_(n_, true), size_(n_, 1), cross_(n_ * n_) {
    const SimilarityView dense = sim.materialized();
    for (std::size_t i = 0; i < n_; ++i) {
      const auto row = dense.row(i);
      std::copy(row.begin(), row.end(), cross_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    }
    node_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) node_[i] = static_cast<Dendrogram::NodeId>(i);
  }

  bool alive(std::size_t slot) const { return alive_[slot]; }

  /// Criterion between live clusters in slots a and b.
  double value(std::size_t a, std::size_t b) const {
    const double c = cross_[a * n_ + b];
    if (rule_ == LinkageRule::kSingle) return c;
    return c / (static_cast<double>(size_[a]) * static_cast<double>(size_[b]));
  }

  /// Merges slot b into slot a (a < b) and records the step.
  MergeStep merge(std::size_t a, std::size_t b, Dendrogram::Builder& builder) {
    MergeStep step;
    step.left = node_[a];
    step.right = node_[b];
    step.left_size = size_[a];
    step.right_size = size_[b];
    step.linkage = value(a, b);
    if (rule_ == LinkageRule::kAverage) {
      step.score = cross_[a * n_ + b] * static_cast<double>(n_ - size_[a] - size_[b]);
    }
    step.merged = builder.join(node_[a], node_[b]);
    node_[a] = step.merged;
    size_[a] += size_[b];
    alive_[b] = false;
    for (std::size_t c = 0; c < n_; ++c) {
      if (!alive_[c] || c == a) continue;
      const double x = cross_[a * n_ + c];
      const double y = cross_[b * n_ + c];
      const double merged = rule_ == LinkageRule::kSingle ? std::max(x, y) : x + y;
      cross_[a * n_ + c] = merged;
      cross_[c * n_ + a] = merged;
    }
    return step;
  }

 private:
  std::size_t n_;
  LinkageRule rule_;
  std::vector<bool> alive_;
  std::vector<std::size_t> size_;
  std::vector<double> cross_;  // total (average) or maximum (single) cross weight
  std::vector<Dendrogram::NodeId> node_;
};

}  // namespace ehc::detail
