#include "ehc/core.hpp"

#include <cmath>
#include <string>

namespace ehc {

PointSet::PointSet(std::size_t n, std::size_t dim, std::vector<double> coords)
    : n_(n), dim_(dim), coords_(std::move(coords)) {
  if (n_ == 0) throw std::invalid_argument("PointSet: need at least one point");
  if (dim_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
  if (coords_.size() != n_ * dim_) {
    throw std::invalid_argument("PointSet: expected " + std::to_string(n_ * dim_) +
                                " coordinates, got " + std::to_string(coords_.size()));
  }
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (!std::isfinite(coords_[k])) {
      throw std::invalid_argument("PointSet: non-finite coordinate at point " +
                                  std::to_string(k / dim_));
    }
  }
}

PointSet PointSet::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("PointSet: need at least one point");
  const std::size_t dim = rows.front().size();
  std::vector<double> coords;
  coords.reserve(rows.size() * dim);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != dim) {
      throw std::invalid_argument("PointSet: row " + std::to_string(i) +
                                  " has dimension " + std::to_string(rows[i].size()) +
                                  ", expected " + std::to_string(dim));
    }
    coords.insert(coords.end(), rows[i].begin(), rows[i].end());
  }
  return PointSet(rows.size(), dim, std::move(coords));
}

PointSet PointSet::from_1d(std::span<const double> xs) {
  return PointSet(xs.size(), 1, std::vector<double>(xs.begin(), xs.end()));
}

PointSet PointSet::head(std::size_t count) const {
  if (count == 0 || count > n_) throw std::out_of_range("PointSet::head: bad count");
  return PointSet(count, dim_,
                  std::vector<double>(coords_.begin(), coords_.begin() + count * dim_));
}

}  // namespace ehc
