#include <string>
#include <vector>

#include "ehc/algorithms.hpp"
#include "linkage_rule.hpp"

namespace ehc {

namespace {

using detail::LinkageRule;

// Agglomeration over cluster slots. A cluster lives in the slot of its
// smallest point index, so slot ids double as tie-break keys. Every live
// slot caches its best partner; after a merge only the slots whose partner
// disappeared are rescanned, and the next pair is found by a linear scan
// over the cached partners.
LinkageResult agglomerate(const SimilarityView& sim, LinkageRule rule, const char* who) {
  const std::size_t n = sim.size();
  sim.require_within_limit(who);
  AlgorithmTrace trace;
  Dendrogram::Builder builder(n);
  for (std::size_t i = 0; i < n; ++i) builder.add_leaf(i);
  if (n == 1) return {std::move(builder).finish(), std::move(trace)};

  detail::ClusterState state(sim, rule);
  std::vector<std::size_t> best(n, 0);
  std::vector<double> best_value(n, 0.0);

  auto rescan = [&](std::size_t a) {
    bool have = false;
    for (std::size_t c = 0; c < n; ++c) {
      if (c == a || !state.alive(c)) continue;
      const double v = state.value(a, c);
      if (!have || detail::better(v, a, c, best_value[a], a, best[a])) {
        best[a] = c;
        best_value[a] = v;
        have = true;
      }
    }
  };
  for (std::size_t a = 0; a < n; ++a) rescan(a);

  trace.merges.reserve(n - 1);
  for (std::size_t step = 0; step + 1 < n; ++step) {
    std::size_t a = n;
    for (std::size_t c = 0; c < n; ++c) {
      if (!state.alive(c)) continue;
      if (a == n || detail::better(best_value[c], c, best[c], best_value[a], a, best[a])) a = c;
    }
    std::size_t b = best[a];
    if (b < a) std::swap(a, b);

    trace.merges.push_back(state.merge(a, b, builder));

    rescan(a);
    for (std::size_t c = 0; c < n; ++c) {
      if (!state.alive(c) || c == a) continue;
      if (best[c] == a || best[c] == b) {
        rescan(c);
      } else {
        const double v = state.value(c, a);
        if (detail::better(v, c, a, best_value[c], c, best[c])) {
          best[c] = a;
          best_value[c] = v;
        }
      }
    }
  }
  return {std::move(builder).finish(), std::move(trace)};
}

}  // namespace

LinkageResult average_linkage(const SimilarityView& sim) {
  return agglomerate(sim, LinkageRule::kAverage, "average_linkage");
}

Dendrogram single_linkage(const SimilarityView& sim) {
  return agglomerate(sim, LinkageRule::kSingle, "single_linkage").tree;
}

}  // namespace ehc
