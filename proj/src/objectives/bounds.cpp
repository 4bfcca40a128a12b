#include <algorithm>
#include <string>
#include <vector>

#include "ehc/objectives.hpp"

namespace ehc {

namespace {

// Neumaier summation in extended precision.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if ((sum_ >= 0 ? sum_ : -sum_) >= (x >= 0 ? x : -x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return static_cast<double>(sum_ + carry_); }

 private:
  long double sum_ = 0.0L;
  long double carry_ = 0.0L;
};

// sum over i in left, k in right of max(left_i, right_k), both ascending.
double sum_of_pairwise_max(std::span<const double> left, std::span<const double> right) {
  double total = 0.0;
  std::size_t q = 0;
  for (double l : left) {
    while (q < right.size() && right[q] <= l) ++q;
    total += l * static_cast<double>(q);
  }
  std::size_t p = 0;
  for (double r : right) {
    while (p < left.size() && left[p] < r) ++p;
    total += r * static_cast<double>(p);
  }
  return total;
}

}  // namespace

OneDBounds one_d_bounds(const SimilarityView& w) {
  const std::size_t n = w.size();
  OneDBounds out;
  if (n < 3) return out;
  w.require_within_limit("one_d_bounds");

  // Pair (a, b) is the left pair of n-1-b triples and the right pair of a.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      out.sum_upper += w(a, b) * static_cast<double>((n - 1 - b) + a);
    }
  }

  // For a middle point j the left weights w(i, j) rise as i -> j and the
  // right weights w(j, k) fall as k moves away, so both lists arrive sorted
  // under a monotone kernel. Sort defensively if rounding disagrees.
  std::vector<double> left;
  std::vector<double> right;
  left.reserve(n);
  right.reserve(n);
  for (std::size_t j = 1; j + 1 < n; ++j) {
    left.clear();
    right.clear();
    for (std::size_t i = 0; i < j; ++i) left.push_back(w(i, j));
    for (std::size_t k = n - 1; k > j; --k) right.push_back(w(j, k));
    if (!std::is_sorted(left.begin(), left.end())) std::sort(left.begin(), left.end());
    if (!std::is_sorted(right.begin(), right.end())) std::sort(right.begin(), right.end());
    out.max_upper += sum_of_pairwise_max(left, right);
  }
  return out;
}

OneDBounds one_d_bounds(std::span<const double> sorted_x, const KernelSpec& kernel) {
  require_sorted(sorted_x, "one_d_bounds");
  validate(kernel);
  if (sorted_x.size() < 3) return {};
  const auto points = PointSet::from_1d(sorted_x);
  return one_d_bounds(SimilarityView::lazy(points, kernel));
}

double potential_phi(const Partition& partition, const SimilarityView& w) {
  const std::size_t n = w.size();
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> part_of(n, kUnset);
  std::vector<std::size_t> begin(partition.size());
  std::vector<std::size_t> end(partition.size());
  for (std::size_t p = 0; p < partition.size(); ++p) {
    const auto& part = partition[p];
    if (part.empty()) throw std::invalid_argument("potential_phi: empty part");
    std::size_t lo = n;
    std::size_t hi = 0;
    for (std::size_t idx : part) {
      if (idx >= n) {
        throw std::invalid_argument("potential_phi: index " + std::to_string(idx) +
                                    " out of range");
      }
      if (part_of[idx] != kUnset) {
        throw std::invalid_argument("potential_phi: index " + std::to_string(idx) +
                                    " appears in more than one part");
      }
      part_of[idx] = p;
      lo = std::min(lo, idx);
      hi = std::max(hi, idx);
    }
    if (hi - lo + 1 != part.size()) {
      throw std::invalid_argument("potential_phi: part " + std::to_string(p) +
                                  " is not an interval of the sorted order");
    }
    begin[p] = lo;
    end[p] = hi + 1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (part_of[i] == kUnset) {
      throw std::invalid_argument("potential_phi: index " + std::to_string(i) +
                                  " is not covered");
    }
  }

  // A pair (a, b) in different parts is the left pair of every triple whose
  // third point lies beyond b's part, and the right pair of every triple
  // whose first point lies before a's part.
  CompensatedSum phi;
  for (std::size_t a = 0; a < n; ++a) {
    const auto pa = part_of[a];
    for (std::size_t b = end[pa]; b < n; ++b) {
      const auto pb = part_of[b];
      const auto triples = (n - end[pb]) + begin[pa];
      if (triples == 0) continue;
      phi.add(static_cast<long double>(w(a, b)) * static_cast<long double>(triples));
    }
  }
  return phi.value();
}

double potential_phi(const Partition& partition, std::span<const double> sorted_x,
                     const KernelSpec& kernel) {
  require_sorted(sorted_x, "potential_phi");
  validate(kernel);
  const auto points = PointSet::from_1d(sorted_x);
  return potential_phi(partition, SimilarityView::lazy(points, kernel));
}

}  // namespace ehc
