#pragma once

// Hierarchical-clustering objectives and the upper bounds used to judge
// them.
//
//   F+(T) = sum_{i<j} w_ij (n - |T(i,j)|)     (maximise)
//   F-(T) = sum_{i<j} w_ij |T(i,j)|           (minimise)
//
// F+ also decomposes over triples: each triple contributes the weight of
// the pair that stays together when the third point is split off first.
// That gives the generic bound MAX-upper and, for sorted 1D data under a
// monotone kernel, the tighter 1D-MAX-upper <= 1D-SUM-upper.
//
// Pair sums run in index-ascending order (i, then j > i), so results do not
// depend on the thread count. Relative tolerances of 1e-9 are used wherever
// two summation routes are compared.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ehc/core.hpp"
#include "ehc/kernels.hpp"

namespace ehc {

inline constexpr std::size_t kDefaultCubicLimit = 5'000;
inline constexpr std::size_t kBruteForceLimit = 10;

double f_plus(const Dendrogram& tree, const SimilarityView& sim);
double f_minus(const Dendrogram& tree, const SimilarityView& sim);

/// F+ summed over triples via first_separated. O(n^3); an independent
/// route to the same value as f_plus.
double f_plus_triplewise(const Dendrogram& tree, const SimilarityView& sim);

struct CubicGate {
  std::size_t limit = kDefaultCubicLimit;
  bool force = false;
};

struct MaxUpper {
  double value = 0.0;
  bool degenerate = false;  // set when n < 3: no triples, value is 0
};

/// sum over triples of max(w_ij, w_jk, w_ik). Throws RefusedComputation when
/// n exceeds the cubic gate and the gate is not forced.
MaxUpper max_upper(const SimilarityView& sim, CubicGate gate = {});

struct OneDBounds {
  double sum_upper = 0.0;  // sum over i<j<k of (w_ij + w_jk)
  double max_upper = 0.0;  // sum over i<j<k of max(w_ij, w_jk)
};

/// Both 1D bounds in O(n^2). `sorted_x` must be ascending.
OneDBounds one_d_bounds(std::span<const double> sorted_x, const KernelSpec& kernel);

/// Same bounds for a view indexed in sorted 1D order.
OneDBounds one_d_bounds(const SimilarityView& sorted_view);

using Partition = std::vector<std::vector<std::size_t>>;

/// Sum of (w_ij + w_jk) over triples i<j<k whose three points lie in three
/// different parts. Each part must be a contiguous run of sorted positions.
/// Uses compensated summation so that differences between successive
/// partitions are accurate far below 1e-12.
double potential_phi(const Partition& partition, std::span<const double> sorted_x,
                     const KernelSpec& kernel);
double potential_phi(const Partition& partition, const SimilarityView& sorted_view);

struct OptimalTree {
  Dendrogram tree;
  double value = 0.0;
  /// Number of distinct binary trees covered by the search, (2n-3)!!.
  std::uint64_t trees_considered = 0;
};

/// Exact F+ maximiser by dynamic programming over leaf subsets (O(3^n)).
/// Ties resolve to the tree with the smallest canonical Newick string.
/// Throws RefusedComputation for n > 10.
OptimalTree optimal_tree_bruteforce(const SimilarityView& sim);

struct MonteCarloSummary {
  std::size_t repeats = 0;
  double mean = 0.0;
  double std_error = 0.0;
};

/// F+ of one tree next to whichever bounds were computed. Bound names are
/// "MAX-upper", "1D-MAX-upper" and "1D-SUM-upper"; ratios use the same keys.
struct ObjectiveReport {
  std::size_t n = 0;
  double f_plus = 0.0;
  std::optional<double> f_minus;
  std::map<std::string, double> bounds;
  std::map<std::string, double> ratios;
  std::vector<std::string> skipped;
  std::optional<MonteCarloSummary> monte_carlo;
  std::map<std::string, double> mean_ratios;
};

enum class BoundSelection { kNone, kMax, kOneD, kAll };

struct ReportOptions {
  BoundSelection bounds = BoundSelection::kAll;
  CubicGate gate;
  bool include_f_minus = true;
};

/// Builds a report for `tree`. 1D bounds are computed only when `points` is
/// given, one-dimensional and the kernel is known; bounds whose gates fail
/// are listed in `skipped` instead of raising.
ObjectiveReport make_report(const Dendrogram& tree, const SimilarityView& sim,
                            const ReportOptions& options,
                            std::optional<MonteCarloSummary> monte_carlo = std::nullopt);

/// Recomputes ratios (and Monte Carlo mean ratios) from the stored bounds.
void fill_ratios(ObjectiveReport& report);

}  // namespace ehc
