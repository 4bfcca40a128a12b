#include <algorithm>
#include <string>
#include <vector>

#include "ehc/objectives.hpp"

namespace ehc {

namespace {

void check_match(const Dendrogram& tree, const SimilarityView& sim, std::string_view who) {
  if (tree.leaf_count() != sim.size()) {
    throw std::invalid_argument(std::string(who) + ": tree has " +
                                std::to_string(tree.leaf_count()) +
                                " leaves but the similarity has " + std::to_string(sim.size()) +
                                " points");
  }
}

// Per-row partial sums with a fixed j order, reduced in row order.
template <class PairTerm>
double pair_sum_parallel(std::size_t n, PairTerm term) {
  std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    double s = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) s += term(i, j);
    rows[i] = s;
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return total;
}

}  // namespace

double f_plus(const Dendrogram& tree, const SimilarityView& sim) {
  check_match(tree, sim, "f_plus");
  const std::size_t n = sim.size();
  if (n <= 2) return 0.0;
  sim.require_within_limit("f_plus");
  const LcaIndex lca(tree);
  const auto nd = static_cast<double>(n);
  return pair_sum_parallel(n, [&](std::size_t i, std::size_t j) {
    return sim(i, j) * (nd - static_cast<double>(lca.subtree_size(i, j)));
  });
}

double f_minus(const Dendrogram& tree, const SimilarityView& sim) {
  check_match(tree, sim, "f_minus");
  const std::size_t n = sim.size();
  if (n < 2) return 0.0;
  sim.require_within_limit("f_minus");
  const LcaIndex lca(tree);
  return pair_sum_parallel(n, [&](std::size_t i, std::size_t j) {
    return sim(i, j) * static_cast<double>(lca.subtree_size(i, j));
  });
}

double f_plus_triplewise(const Dendrogram& tree, const SimilarityView& sim) {
  check_match(tree, sim, "f_plus_triplewise");
  const std::size_t n = sim.size();
  if (n < 3) return 0.0;
  sim.require_within_limit("f_plus_triplewise");
  const LcaIndex lca(tree);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const auto x = lca.first_separated(i, j, k);
        total += x == k ? sim(i, j) : x == i ? sim(j, k) : sim(i, k);
      }
    }
  }
  return total;
}

MaxUpper max_upper(const SimilarityView& sim, CubicGate gate) {
  const std::size_t n = sim.size();
  if (n < 3) return {0.0, true};
  if (n > gate.limit && !gate.force) {
    throw RefusedComputation("MAX-upper: " + std::to_string(n) +
                             " points exceed the cubic-cost gate of " +
                             std::to_string(gate.limit) + " (use --force-cubic)");
  }
  sim.require_within_limit("MAX-upper");
  const SimilarityView dense = sim.materialized();
  std::vector<double> rows(n, 0.0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const auto wi = dense.row(i);
    double s = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto wj = dense.row(j);
      const double wij = wi[j];
      for (std::size_t k = j + 1; k < n; ++k) {
        s += std::max(wij, std::max(wi[k], wj[k]));
      }
    }
    rows[i] = s;
  }
  double total = 0.0;
  for (double r : rows) total += r;
  return {total, false};
}

}  // namespace ehc
