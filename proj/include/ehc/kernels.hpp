#pragma once

// Distance-based similarity measures and the SimilarityView that every
// objective and linkage algorithm reads weights through.
//
// Gaussian weights are exp(-|u-v|^2 / (2 sigma^2)) with no normalising
// prefactor; objective values are therefore unnormalised. For large
// |u-v|/sigma the weight underflows to exactly 0.0, which is accepted.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "ehc/core.hpp"

namespace ehc {

struct GaussianKernel {
  double sigma = 1.0;
};

/// Non-increasing function of distance into [0, 1], given as knots
/// (distance, value) and linearly interpolated. Constant beyond the first
/// and last knot.
class MonotoneTable {
 public:
  MonotoneTable(std::vector<double> distances, std::vector<double> values);

  double operator()(double distance) const;
  std::span<const double> distances() const { return distances_; }
  std::span<const double> values() const { return values_; }

 private:
  std::vector<double> distances_;
  std::vector<double> values_;
};

using KernelSpec = std::variant<GaussianKernel, MonotoneTable>;

/// Throws std::invalid_argument if the kernel violates its invariants.
void validate(const KernelSpec& kernel);

double squared_distance(std::span<const double> u, std::span<const double> v);

double gaussian_weight(std::span<const double> u, std::span<const double> v, double sigma);

/// Weight for a pair at the given squared Euclidean distance.
double weight_at_squared_distance(const KernelSpec& kernel, double squared_distance);

double kernel_weight(const KernelSpec& kernel, std::span<const double> u,
                     std::span<const double> v);

/// Minimum pairwise Gaussian weight (the weight of the diameter pair).
double delta_of(const PointSet& points, double sigma);

inline constexpr std::size_t kDefaultMaterializeLimit = 20'000;

class SimilarityView;
namespace serial {
SimilarityView materialize(const SimilarityView& view);
}

/// Pairwise weights w_ij in [0, 1], either computed on demand from a point
/// set and kernel or stored as an explicit symmetric matrix.
///
/// A lazy view refers to its PointSet without owning it; the point set must
/// outlive the view and every view derived from it. Diagonal entries are
/// never read by consumers.
class SimilarityView {
 public:
  static SimilarityView lazy(const PointSet& points, KernelSpec kernel,
                             std::size_t materialize_limit = kDefaultMaterializeLimit);

  /// Row-major n x n matrix. Entries must lie in [0, 1] and be symmetric to
  /// within 1e-9; the stored matrix is symmetrised by averaging.
  static SimilarityView from_matrix(std::size_t n, std::vector<double> weights,
                                    std::size_t materialize_limit = kDefaultMaterializeLimit);

  std::size_t size() const { return n_; }
  std::size_t materialize_limit() const { return limit_; }
  bool is_materialized() const { return dense_ != nullptr; }

  double operator()(std::size_t i, std::size_t j) const {
    if (dense_) return (*dense_)[i * n_ + j];
    return kernel_weight(*kernel_, points_->point(i), points_->point(j));
  }

  /// Dense copy of this view. Throws RefusedComputation above the limit.
  SimilarityView materialized() const;

  /// Throws RefusedComputation if n exceeds the materialization limit.
  /// Quadratic and cubic consumers call this before touching the weights.
  void require_within_limit(std::string_view consumer) const;

  /// Row i of the dense matrix. Only valid when materialized.
  std::span<const double> row(std::size_t i) const {
    return {dense_->data() + i * n_, n_};
  }

  const PointSet* points() const { return points_; }
  const KernelSpec* kernel() const { return kernel_ ? &*kernel_ : nullptr; }

  SimilarityView with_limit(std::size_t materialize_limit) const;

 private:
  SimilarityView() = default;

  std::size_t n_ = 0;
  std::size_t limit_ = kDefaultMaterializeLimit;
  const PointSet* points_ = nullptr;
  std::optional<KernelSpec> kernel_;
  std::shared_ptr<const std::vector<double>> dense_;

  friend SimilarityView serial::materialize(const SimilarityView&);
};

/// Checks w_ik <= min(w_ij, w_jk) for every triple i < j < k of a view
/// whose indices follow sorted 1D order. Exhaustive, O(n^2): the triple
/// condition is equivalent to rows being non-increasing to the right of the
/// diagonal and columns non-decreasing above it.
bool monotone_1d_check(const SimilarityView& sorted_view);

/// Same check for sorted 1D coordinates under a kernel. Throws
/// std::invalid_argument if `sorted_x` is not ascending.
bool monotone_1d_check(std::span<const double> sorted_x, const KernelSpec& kernel);

void require_sorted(std::span<const double> xs, std::string_view who);

}  // namespace ehc
