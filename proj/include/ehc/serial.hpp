#pragma once

// Single-threaded reference versions of the OpenMP kernels. They share the
// summation order of their parallel counterparts, so results agree bit for
// bit; tests and the benchmark target compare the two.

#include <cstdint>
#include <vector>

#include "ehc/algorithms.hpp"
#include "ehc/kernels.hpp"
#include "ehc/objectives.hpp"

namespace ehc::serial {

SimilarityView materialize(const SimilarityView& view);

double f_plus(const Dendrogram& tree, const SimilarityView& sim);
double f_minus(const Dendrogram& tree, const SimilarityView& sim);
MaxUpper max_upper(const SimilarityView& sim, CubicGate gate = {});

/// x_i = <v_i, direction>.
std::vector<double> project(const PointSet& points, std::span<const double> direction);

PointSet jl_project(const PointSet& points, std::size_t target_dim, RandomSeed seed);

MonteCarloSummary expected_f_plus(RandomizedAlgorithm algorithm, const PointSet& points,
                                  const SimilarityView& sim, std::size_t repeats,
                                  RandomSeed seed);

/// O(n^3) agglomeration: every step scans all live cluster pairs.
LinkageResult average_linkage(const SimilarityView& sim);
Dendrogram single_linkage(const SimilarityView& sim);

}  // namespace ehc::serial
