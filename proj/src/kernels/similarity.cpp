#include <cmath>
#include <string>

#include "ehc/kernels.hpp"

namespace ehc {

SimilarityView SimilarityView::lazy(const PointSet& points, KernelSpec kernel,
                                    std::size_t materialize_limit) {
  validate(kernel);
  SimilarityView v;
  v.n_ = points.size();
  v.limit_ = materialize_limit;
  v.points_ = &points;
  v.kernel_ = std::move(kernel);
  return v;
}

SimilarityView SimilarityView::from_matrix(std::size_t n, std::vector<double> w,
                                           std::size_t materialize_limit) {
  if (n == 0) throw std::invalid_argument("weight matrix: empty");
  if (w.size() != n * n) {
    throw std::invalid_argument("weight matrix: expected " + std::to_string(n * n) +
                                " entries, got " + std::to_string(w.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double x = w[i * n + j];
      if (!std::isfinite(x) || x < 0.0 || x > 1.0) {
        throw std::invalid_argument("weight matrix: entry (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside [0, 1]");
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double a = w[i * n + j];
      const double b = w[j * n + i];
      if (std::abs(a - b) > 1e-9) {
        throw std::invalid_argument("weight matrix: not symmetric at (" + std::to_string(i) +
                                    ", " + std::to_string(j) + ")");
      }
      const double avg = 0.5 * (a + b);
      w[i * n + j] = avg;
      w[j * n + i] = avg;
    }
  }
  SimilarityView v;
  v.n_ = n;
  v.limit_ = materialize_limit;
  v.dense_ = std::make_shared<const std::vector<double>>(std::move(w));
  return v;
}

void SimilarityView::require_within_limit(std::string_view consumer) const {
  if (n_ > limit_) {
    throw RefusedComputation(std::string(consumer) + ": " + std::to_string(n_) +
                             " points exceed the materialization limit of " +
                             std::to_string(limit_) + " (--materialize-limit)");
  }
}

SimilarityView SimilarityView::with_limit(std::size_t materialize_limit) const {
  SimilarityView v = *this;
  v.limit_ = materialize_limit;
  return v;
}

SimilarityView SimilarityView::materialized() const {
  if (dense_) return *this;
  require_within_limit("materialize");
  const std::size_t n = n_;
  auto dense = std::make_shared<std::vector<double>>(n * n);
  double* out = dense->data();
  const auto& kernel = *kernel_;
  const auto& pts = *points_;
  // Each entry is written by exactly one thread, so the result matches the
  // serial reference bit for bit.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    out[i * n + i] = kernel_weight(kernel, pts.point(i), pts.point(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = kernel_weight(kernel, pts.point(i), pts.point(j));
      out[i * n + j] = w;
      out[j * n + i] = w;
    }
  }
  SimilarityView v;
  v.n_ = n;
  v.limit_ = limit_;
  v.points_ = points_;
  v.kernel_ = kernel_;
  v.dense_ = std::move(dense);
  return v;
}

}  // namespace ehc
