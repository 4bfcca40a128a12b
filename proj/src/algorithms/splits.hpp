#pragma once

#include <random>
#include <span>
#include <vector>

#include "ehc/algorithms.hpp"

namespace ehc::detail {

/// Random Cut splits of sorted coordinates, in preorder (left subtree first),
/// drawing one uniform per split of a non-constant interval from `engine`.
std::vector<SplitStep> random_splits(std::span<const double> sorted_x, std::mt19937_64& engine);

}  // namespace ehc::detail
