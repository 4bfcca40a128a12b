#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ehc/objectives.hpp"

namespace ehc {

namespace {

bool wants_max(BoundSelection s) { return s == BoundSelection::kMax || s == BoundSelection::kAll; }
bool wants_one_d(BoundSelection s) {
  return s == BoundSelection::kOneD || s == BoundSelection::kAll;
}

void add_one_d(ObjectiveReport& report, const SimilarityView& sim) {
  const PointSet* points = sim.points();
  const KernelSpec* kernel = sim.kernel();
  if (points == nullptr || kernel == nullptr) {
    report.skipped.push_back("1D bounds: need point coordinates and a kernel");
    return;
  }
  if (points->dim() != 1) {
    report.skipped.push_back("1D bounds: points are " + std::to_string(points->dim()) +
                             "-dimensional");
    return;
  }
  if (sim.size() > sim.materialize_limit()) {
    report.skipped.push_back("1D bounds: " + std::to_string(sim.size()) +
                             " points exceed the materialization limit of " +
                             std::to_string(sim.materialize_limit()));
    return;
  }
  // Both bounds are invariant under relabelling, so sort first.
  std::vector<double> xs(points->coords().begin(), points->coords().end());
  std::sort(xs.begin(), xs.end());
  const auto bounds = one_d_bounds(xs, *kernel);
  report.bounds["1D-MAX-upper"] = bounds.max_upper;
  report.bounds["1D-SUM-upper"] = bounds.sum_upper;
}

}  // namespace

ObjectiveReport make_report(const Dendrogram& tree, const SimilarityView& sim,
                            const ReportOptions& options,
                            std::optional<MonteCarloSummary> monte_carlo) {
  ObjectiveReport report;
  report.n = sim.size();
  report.f_plus = f_plus(tree, sim);
  if (options.include_f_minus) report.f_minus = f_minus(tree, sim);
  report.monte_carlo = monte_carlo;

  if (wants_max(options.bounds)) {
    if (sim.size() < 3) {
      report.bounds["MAX-upper"] = 0.0;
    } else if (sim.size() > options.gate.limit && !options.gate.force) {
      report.skipped.push_back("MAX-upper: " + std::to_string(sim.size()) +
                               " points exceed the cubic-cost gate of " +
                               std::to_string(options.gate.limit) + " (use --force-cubic)");
    } else if (sim.size() > sim.materialize_limit()) {
      report.skipped.push_back("MAX-upper: " + std::to_string(sim.size()) +
                               " points exceed the materialization limit of " +
                               std::to_string(sim.materialize_limit()));
    } else {
      report.bounds["MAX-upper"] = max_upper(sim, options.gate).value;
    }
  }
  if (wants_one_d(options.bounds)) add_one_d(report, sim);
  fill_ratios(report);
  return report;
}

void fill_ratios(ObjectiveReport& report) {
  report.ratios.clear();
  report.mean_ratios.clear();
  for (const auto& [name, bound] : report.bounds) {
    if (bound <= 0.0) continue;
    report.ratios[name] = report.f_plus / bound;
    if (report.monte_carlo) report.mean_ratios[name] = report.monte_carlo->mean / bound;
  }
}

}  // namespace ehc
