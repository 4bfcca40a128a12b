#include <cmath>
#include <exception>
#include <string>
#include <vector>

#include "ehc/algorithms.hpp"

namespace ehc {

namespace {

void check_inputs(RandomizedAlgorithm algorithm, const PointSet& points,
                  const SimilarityView& sim, std::size_t repeats) {
  if (repeats == 0) throw std::invalid_argument("expected_f_plus: repeats must be >= 1");
  if (points.size() != sim.size()) {
    throw std::invalid_argument("expected_f_plus: " + std::to_string(points.size()) +
                                " points but the similarity has " +
                                std::to_string(sim.size()));
  }
  if (algorithm == RandomizedAlgorithm::kRandomCut && points.dim() != 1) {
    throw std::invalid_argument("expected_f_plus: random cut needs one-dimensional points");
  }
}

Dendrogram sample_tree(RandomizedAlgorithm algorithm, const PointSet& points, RandomSeed seed) {
  return algorithm == RandomizedAlgorithm::kRandomCut ? random_cut_points(points, seed)
                                                      : projected_random_cut(points, seed);
}

}  // namespace

std::vector<double> f_plus_samples(RandomizedAlgorithm algorithm, const PointSet& points,
                                   const SimilarityView& sim, std::size_t repeats,
                                   RandomSeed seed) {
  check_inputs(algorithm, points, sim, repeats);
  const SimilarityView dense = sim.materialized();
  std::vector<double> samples(repeats);
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t sk = 0; sk < static_cast<std::ptrdiff_t>(repeats); ++sk) {
    const auto k = static_cast<std::uint64_t>(sk);
    try {
      samples[k] = f_plus(sample_tree(algorithm, points, seed.derive(k)), dense);
    } catch (...) {
#pragma omp critical(ehc_monte_carlo_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return samples;
}

MonteCarloSummary expected_f_plus(RandomizedAlgorithm algorithm, const PointSet& points,
                                  const SimilarityView& sim, std::size_t repeats,
                                  RandomSeed seed) {
  const auto samples = f_plus_samples(algorithm, points, sim, repeats, seed);
  return summarize(samples);
}

MonteCarloSummary summarize(std::span<const double> samples) {
  MonteCarloSummary out;
  out.repeats = samples.size();
  if (samples.empty()) return out;
  double sum = 0.0;
  for (double s : samples) sum += s;
  out.mean = sum / static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0.0;
    for (double s : samples) ss += (s - out.mean) * (s - out.mean);
    const double variance = ss / static_cast<double>(samples.size() - 1);
    out.std_error = std::sqrt(variance / static_cast<double>(samples.size()));
  }
  return out;
}

}  // namespace ehc
