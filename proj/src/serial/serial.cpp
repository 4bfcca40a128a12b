#include <cmath>
#include <string>

#include "../algorithms/linkage_rule.hpp"
#include "ehc/instances.hpp"
#include "ehc/serial.hpp"

namespace ehc::serial {

SimilarityView materialize(const SimilarityView& view) {
  if (view.dense_) return view;
  view.require_within_limit("materialize");
  const std::size_t n = view.n_;
  auto dense = std::make_shared<std::vector<double>>(n * n);
  auto& out = *dense;
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = kernel_weight(*view.kernel_, view.points_->point(i), view.points_->point(i));
    for (std::size_t j = i + 1; j < n; ++j) {
      const double w = kernel_weight(*view.kernel_, view.points_->point(i), view.points_->point(j));
      out[i * n + j] = w;
      out[j * n + i] = w;
    }
  }
  SimilarityView v = view;
  v.dense_ = std::move(dense);
  return v;
}

namespace {

template <class PairTerm>
double pair_sum(std::size_t n, PairTerm term) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) s += term(i, j);
    total += s;
  }
  return total;
}

void check_match(const Dendrogram& tree, const SimilarityView& sim) {
  if (tree.leaf_count() != sim.size()) {
    throw std::invalid_argument("serial: tree and similarity sizes differ");
  }
}

LinkageResult agglomerate_naive(const SimilarityView& sim, detail::LinkageRule rule) {
  const std::size_t n = sim.size();
  sim.require_within_limit("serial linkage");
  AlgorithmTrace trace;
  Dendrogram::Builder builder(n);
  for (std::size_t i = 0; i < n; ++i) builder.add_leaf(i);
  if (n > 1) {
    detail::ClusterState state(sim, rule);
    for (std::size_t step = 0; step + 1 < n; ++step) {
      std::size_t ba = n, bb = n;
      double bv = 0.0;
      for (std::size_t a = 0; a < n; ++a) {
        if (!state.alive(a)) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (!state.alive(b)) continue;
          const double v = state.value(a, b);
          if (ba == n || detail::better(v, a, b, bv, ba, bb)) {
            ba = a;
            bb = b;
            bv = v;
          }
        }
      }
      trace.merges.push_back(state.merge(ba, bb, builder));
    }
  }
  return {std::move(builder).finish(), std::move(trace)};
}

}  // namespace

double f_plus(const Dendrogram& tree, const SimilarityView& sim) {
  check_match(tree, sim);
  const std::size_t n = sim.size();
  if (n <= 2) return 0.0;
  sim.require_within_limit("f_plus");
  const LcaIndex lca(tree);
  const auto nd = static_cast<double>(n);
  return pair_sum(n, [&](std::size_t i, std::size_t j) {
    return sim(i, j) * (nd - static_cast<double>(lca.subtree_size(i, j)));
  });
}

double f_minus(const Dendrogram& tree, const SimilarityView& sim) {
  check_match(tree, sim);
  const std::size_t n = sim.size();
  if (n < 2) return 0.0;
  sim.require_within_limit("f_minus");
  const LcaIndex lca(tree);
  return pair_sum(n, [&](std::size_t i, std::size_t j) {
    return sim(i, j) * static_cast<double>(lca.subtree_size(i, j));
  });
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
  const SimilarityView dense = materialize(sim);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto wi = dense.row(i);
    double s = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto wj = dense.row(j);
      const double wij = wi[j];
      for (std::size_t k = j + 1; k < n; ++k) s += std::max(wij, std::max(wi[k], wj[k]));
    }
    total += s;
  }
  return {total, false};
}

std::vector<double> project(const PointSet& points, std::span<const double> direction) {
  if (direction.size() != points.dim()) {
    throw std::invalid_argument("project: dimension mismatch");
  }
  std::vector<double> x(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points.point(i);
    double s = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * direction[k];
    x[i] = s;
  }
  return x;
}

PointSet jl_project(const PointSet& points, std::size_t target_dim, RandomSeed seed) {
  if (target_dim == 0) throw std::invalid_argument("jl_project: target_dim must be >= 1");
  const std::size_t d = points.dim();
  auto engine = seed.engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim));
  std::vector<double> matrix(target_dim * d);
  for (auto& m : matrix) m = normal(engine) * scale;
  std::vector<double> out(points.size() * target_dim);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points.point(i);
    for (std::size_t r = 0; r < target_dim; ++r) {
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += matrix[r * d + k] * row[k];
      out[i * target_dim + r] = s;
    }
  }
  return PointSet(points.size(), target_dim, std::move(out));
}

MonteCarloSummary expected_f_plus(RandomizedAlgorithm algorithm, const PointSet& points,
                                  const SimilarityView& sim, std::size_t repeats,
                                  RandomSeed seed) {
  if (repeats == 0) throw std::invalid_argument("expected_f_plus: repeats must be >= 1");
  const SimilarityView dense = materialize(sim);
  std::vector<double> samples(repeats);
  for (std::size_t k = 0; k < repeats; ++k) {
    const auto tree = algorithm == RandomizedAlgorithm::kRandomCut
                          ? random_cut_points(points, seed.derive(k))
                          : projected_random_cut(points, seed.derive(k));
    samples[k] = serial::f_plus(tree, dense);
  }
  return summarize(samples);
}

LinkageResult average_linkage(const SimilarityView& sim) {
  return agglomerate_naive(sim, detail::LinkageRule::kAverage);
}

Dendrogram single_linkage(const SimilarityView& sim) {
  return agglomerate_naive(sim, detail::LinkageRule::kSingle).tree;
}

}  // namespace ehc::serial
