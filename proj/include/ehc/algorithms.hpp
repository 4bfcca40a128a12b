#pragma once

// Clustering algorithms.
//
// Divisive, 1D:        random_cut, greedy_cut
// Divisive, R^d:       projected_random_cut (random Gaussian direction, then
//                      random_cut on the sorted projections)
// Agglomerative:       average_linkage, single_linkage
//
// Linkage ties are broken toward the lexicographically smallest pair of
// cluster ids, where a cluster's id is its smallest point index. Sorting of
// projections is stable: equal projections keep original index order.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "ehc/core.hpp"
#include "ehc/kernels.hpp"
#include "ehc/objectives.hpp"

namespace ehc {

struct MergeStep {
  Dendrogram::NodeId left = 0;    // node ids in the returned tree
  Dendrogram::NodeId right = 0;
  Dendrogram::NodeId merged = 0;
  std::size_t left_size = 0;
  std::size_t right_size = 0;
  double linkage = 0.0;  // criterion value that selected this pair
  double score = 0.0;    // w_AB * (n - |A| - |B|); zero for single linkage
};

struct SplitStep {
  std::size_t begin = 0;  // sorted positions [begin, end) being split
  std::size_t end = 0;
  std::size_t cut = 0;    // left part is [begin, cut)
  double threshold = 0.0; // sampled splitter r, or the gap midpoint for greedy cut
};

/// Record of how a tree was built. Merges are in execution order; splits are
/// in depth-first preorder. Replaying either reconstructs the tree exactly.
struct AlgorithmTrace {
  std::vector<MergeStep> merges;
  std::vector<SplitStep> splits;
};

/// Rebuilds the tree from an agglomerative trace over n leaves.
Dendrogram replay_merges(std::size_t n, const AlgorithmTrace& trace);

/// Rebuilds the tree from a divisive trace. Leaf at sorted position p gets
/// label labels[p] (identity when `labels` is empty).
Dendrogram replay_splits(std::size_t n, const AlgorithmTrace& trace,
                         std::span<const std::size_t> labels = {});

/// Recursive uniform splitting of sorted 1D coordinates. Leaves are sorted
/// positions 0..n-1. If every remaining coordinate is equal the first point
/// is split off. Throws std::invalid_argument for unsorted input.
Dendrogram random_cut(std::span<const double> sorted_x, RandomSeed seed,
                      AlgorithmTrace* trace = nullptr);

/// random_cut on arbitrary 1D points: sorts stably, cuts, and relabels the
/// leaves with original indices.
Dendrogram random_cut_points(const PointSet& points, RandomSeed seed);

struct PrcTimings {
  double project_seconds = 0.0;
  double sort_seconds = 0.0;
  double cut_seconds = 0.0;
  double total() const { return project_seconds + sort_seconds + cut_seconds; }
};

/// Projects on a standard Gaussian direction, sorts the projections and
/// runs random_cut on them. Leaves are original point indices. One pass over
/// the input and O(n) auxiliary memory.
Dendrogram projected_random_cut(const PointSet& points, RandomSeed seed,
                                PrcTimings* timings = nullptr);

/// The data pass of projected_random_cut: x_i = <v_i, direction>.
std::vector<double> project(const PointSet& points, std::span<const double> direction);

/// Standard normal direction in R^dim drawn from `engine`.
std::vector<double> gaussian_direction(std::size_t dim, std::mt19937_64& engine);

struct LinkageResult {
  Dendrogram tree;
  AlgorithmTrace trace;
};

/// Merges the pair of clusters with the largest average cross weight until
/// one cluster remains. Lazy-invalidated priority queue over per-cluster
/// best partners. Throws RefusedComputation above the materialization limit.
LinkageResult average_linkage(const SimilarityView& sim);

/// Merges the pair of clusters with the largest single cross weight.
Dendrogram single_linkage(const SimilarityView& sim);

/// Splits at the widest gap (leftmost on ties) and recurses.
Dendrogram greedy_cut(std::span<const double> sorted_x, AlgorithmTrace* trace = nullptr);

enum class RandomizedAlgorithm { kRandomCut, kProjectedRandomCut };

/// Monte Carlo estimate of E[F+]. Repeat k runs with seed.derive(k); repeats
/// are spread over threads and reduced in repeat order, so the result is
/// identical for any thread count. Random cut requires 1D points (any order).
MonteCarloSummary expected_f_plus(RandomizedAlgorithm algorithm, const PointSet& points,
                                  const SimilarityView& sim, std::size_t repeats,
                                  RandomSeed seed);

/// F+ of each repeat, in repeat order.
std::vector<double> f_plus_samples(RandomizedAlgorithm algorithm, const PointSet& points,
                                   const SimilarityView& sim, std::size_t repeats,
                                   RandomSeed seed);

MonteCarloSummary summarize(std::span<const double> samples);

}  // namespace ehc
