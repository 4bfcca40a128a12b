#include <bit>
#include <cmath>
#include <string>
#include <vector>

#include "ehc/objectives.hpp"

namespace ehc {

namespace {

struct Best {
  double value = 0.0;
  std::uint32_t left = 0;  // subset holding the smallest leaf of the parent
  std::uint64_t trees = 1;
  std::string newick;
};

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

Dendrogram::NodeId build(Dendrogram::Builder& builder, const std::vector<Best>& best,
                         std::uint32_t set) {
  if (std::popcount(set) == 1) return builder.add_leaf(std::countr_zero(set));
  const std::uint32_t left = best[set].left;
  const auto l = build(builder, best, left);
  const auto r = build(builder, best, set ^ left);
  return builder.join(l, r);
}

}  // namespace

OptimalTree optimal_tree_bruteforce(const SimilarityView& sim) {
  const std::size_t n = sim.size();
  if (n > kBruteForceLimit) {
    throw RefusedComputation("optimal_tree_bruteforce: " + std::to_string(n) +
                             " points exceed the brute-force limit of " +
                             std::to_string(kBruteForceLimit));
  }
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<Best> best(std::size_t{full} + 1);

  // Splitting S into A and B scores w(A, B) * (n - |S|): every pair across
  // the split has its LCA at this node.
  for (std::uint32_t set = 1; set <= full; ++set) {
    auto& b = best[set];
    if (std::popcount(set) == 1) {
      b.newick = std::to_string(std::countr_zero(set));
      continue;
    }
    const std::uint32_t low = set & (~set + 1u);
    const std::uint32_t rest = set ^ low;
    const double factor = static_cast<double>(n - std::popcount(set));
    bool have = false;
    b.trees = 0;
    // A always contains the lowest leaf, so each unordered split is seen once.
    for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
      const std::uint32_t a = low | sub;
      const std::uint32_t c = set ^ a;
      if (c != 0) {
        double cross = 0.0;
        for (std::uint32_t x = a; x; x &= x - 1) {
          const auto i = static_cast<std::size_t>(std::countr_zero(x));
          for (std::uint32_t y = c; y; y &= y - 1) {
            cross += sim(i, static_cast<std::size_t>(std::countr_zero(y)));
          }
        }
        const double value = best[a].value + best[c].value + cross * factor;
        b.trees += best[a].trees * best[c].trees;
        std::string newick = "(" + best[a].newick + "," + best[c].newick + ")";
        const bool tie = have && nearly_equal(value, b.value);
        if (!have || (!tie && value > b.value) || (tie && newick < b.newick)) {
          b.value = value;
          b.left = a;
          b.newick = std::move(newick);
          have = true;
        }
      }
      if (sub == 0) break;
    }
  }

  Dendrogram::Builder builder(n);
  build(builder, best, full);
  return {std::move(builder).finish(), n < 3 ? 0.0 : best[full].value, best[full].trees};
}

}  // namespace ehc
