#include <algorithm>
#include <cmath>
#include <string>

#include "ehc/kernels.hpp"

namespace ehc {

MonotoneTable::MonotoneTable(std::vector<double> distances, std::vector<double> values)
    : distances_(std::move(distances)), values_(std::move(values)) {
  if (distances_.empty() || distances_.size() != values_.size()) {
    throw std::invalid_argument("MonotoneTable: need matching, non-empty knot lists");
  }
  for (std::size_t k = 0; k < distances_.size(); ++k) {
    if (!std::isfinite(distances_[k]) || !std::isfinite(values_[k])) {
      throw std::invalid_argument("MonotoneTable: non-finite knot");
    }
    if (values_[k] < 0.0 || values_[k] > 1.0) {
      throw std::invalid_argument("MonotoneTable: value outside [0, 1] at knot " +
                                  std::to_string(k));
    }
    if (k > 0 && !(distances_[k] > distances_[k - 1])) {
      throw std::invalid_argument("MonotoneTable: knot distances must increase strictly");
    }
    if (k > 0 && values_[k] > values_[k - 1]) {
      throw std::invalid_argument("MonotoneTable: values must be non-increasing");
    }
  }
}

double MonotoneTable::operator()(double distance) const {
  if (distance <= distances_.front()) return values_.front();
  if (distance >= distances_.back()) return values_.back();
  const auto hi = static_cast<std::size_t>(
      std::upper_bound(distances_.begin(), distances_.end(), distance) - distances_.begin());
  const std::size_t lo = hi - 1;
  const double t = (distance - distances_[lo]) / (distances_[hi] - distances_[lo]);
  // Convex combination keeps the result between the two knot values.
  return std::clamp(values_[lo] + t * (values_[hi] - values_[lo]), values_[hi], values_[lo]);
}

void validate(const KernelSpec& kernel) {
  if (const auto* g = std::get_if<GaussianKernel>(&kernel)) {
    if (!(g->sigma > 0.0) || !std::isfinite(g->sigma)) {
      throw std::invalid_argument("Gaussian kernel: sigma must be positive and finite");
    }
  }
  // MonotoneTable validates itself on construction.
}

double squared_distance(std::span<const double> u, std::span<const double> v) {
  if (u.size() != v.size()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.size()) + " vs " +
                                std::to_string(v.size()));
  }
  double s = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double d = u[k] - v[k];
    s += d * d;
  }
  return s;
}

double gaussian_weight(std::span<const double> u, std::span<const double> v, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_weight: sigma must be positive");
  return std::exp(-squared_distance(u, v) / (2.0 * sigma * sigma));
}

double weight_at_squared_distance(const KernelSpec& kernel, double squared_distance) {
  if (const auto* g = std::get_if<GaussianKernel>(&kernel)) {
    return std::exp(-squared_distance / (2.0 * g->sigma * g->sigma));
  }
  return std::get<MonotoneTable>(kernel)(std::sqrt(squared_distance));
}

double kernel_weight(const KernelSpec& kernel, std::span<const double> u,
                     std::span<const double> v) {
  return weight_at_squared_distance(kernel, squared_distance(u, v));
}

double delta_of(const PointSet& points, double sigma) {
  if (points.size() < 2) throw std::invalid_argument("delta_of: need at least two points");
  if (!(sigma > 0.0)) throw std::invalid_argument("delta_of: sigma must be positive");
  double widest = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      widest = std::max(widest, squared_distance(points.point(i), points.point(j)));
    }
  }
  return std::exp(-widest / (2.0 * sigma * sigma));
}

void require_sorted(std::span<const double> xs, std::string_view who) {
  for (std::size_t i = 1; i < xs.size(); ++i) {
    if (xs[i] < xs[i - 1]) {
      throw std::invalid_argument(std::string(who) + ": coordinates must be sorted ascending (position " +
                                  std::to_string(i) + ")");
    }
  }
}

bool monotone_1d_check(const SimilarityView& w) {
  const std::size_t n = w.size();
  w.require_within_limit("monotone_1d_check");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = i + 2; k < n; ++k) {
      if (w(i, k) > w(i, k - 1)) return false;  // row i, right of the diagonal
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i + 2 <= k; ++i) {
      if (w(i, k) > w(i + 1, k)) return false;  // column k, above the diagonal
    }
  }
  return true;
}

bool monotone_1d_check(std::span<const double> sorted_x, const KernelSpec& kernel) {
  require_sorted(sorted_x, "monotone_1d_check");
  validate(kernel);
  if (sorted_x.size() < 3) return true;
  const auto points = PointSet::from_1d(sorted_x);
  return monotone_1d_check(SimilarityView::lazy(points, kernel));
}

}  // namespace ehc
