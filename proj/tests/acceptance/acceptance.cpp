// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.
//
//   acceptance            run all criteria
//   acceptance --only 6   run criterion 6 (repeatable)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "alloc_counter.hpp"
#include "ehc/algorithms.hpp"
#include "ehc/cli.hpp"
#include "ehc/instances.hpp"
#include "ehc/io.hpp"
#include "ehc/objectives.hpp"

namespace {

using namespace ehc;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_seconds;  // 0 when no runtime bound applies
  std::function<Outcome()> run;
};

struct OneDInstance {
  PointSet points;
  double sigma;
};

std::vector<OneDInstance> one_d_instances(std::size_t count, std::size_t n_lo, std::size_t n_hi,
                                          std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<OneDInstance> out;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(n_lo, n_hi)(rng);
    const double sigma = std::uniform_real_distribution<double>(0.5, 5.0)(rng);
    out.push_back({random_1d(n, 0.0, 10.0, RandomSeed{rng()}), sigma});
  }
  return out;
}

double relative_gap(double a, double b) {
  return std::abs(a - b) / std::max({1e-300, std::abs(a), std::abs(b)});
}

Outcome average_linkage_half_sum_upper() {
  const auto instances = one_d_instances(200, 5, 50, 101);
  double worst = 1e300;
  std::size_t failures = 0;
  for (const auto& inst : instances) {
    const auto sim = SimilarityView::lazy(inst.points, GaussianKernel{inst.sigma});
    const auto al = average_linkage(sim);
    const double f = f_plus(al.tree, sim);
    const auto bounds = one_d_bounds(inst.points.coords(), GaussianKernel{inst.sigma});
    if (f < 0.5 * bounds.sum_upper - 1e-9) ++failures;
    if (bounds.sum_upper > 0) worst = std::min(worst, f / bounds.sum_upper);
  }
  return {failures == 0,
          fmt::format("200 instances, {} violations, min F+/1D-SUM-upper = {:.4f}", failures, worst)};
}

Outcome average_linkage_potential_step() {
  const auto instances = one_d_instances(200, 5, 50, 101);
  double worst = 1e300;
  std::size_t merges = 0;
  std::size_t violations = 0;
  std::size_t non_adjacent = 0;
  for (const auto& inst : instances) {
    const std::size_t n = inst.points.size();
    const auto sim = SimilarityView::lazy(inst.points, GaussianKernel{inst.sigma}).materialized();
    const auto al = average_linkage(sim);
    std::vector<std::size_t> part(n);
    for (std::size_t i = 0; i < n; ++i) part[i] = i;
    auto partition = [&] {
      std::vector<std::vector<std::size_t>> groups(n);
      for (std::size_t i = 0; i < n; ++i) groups[part[i]].push_back(i);
      Partition p;
      for (auto& g : groups) {
        if (!g.empty()) p.push_back(std::move(g));
      }
      return p;
    };
    double phi = potential_phi(partition(), sim);
    for (const auto& m : al.trace.merges) {
      const auto left = al.tree.leaves_under(m.left);
      const auto right = al.tree.leaves_under(m.right);
      const auto [lmin, lmax] = std::minmax_element(left.begin(), left.end());
      const auto [rmin, rmax] = std::minmax_element(right.begin(), right.end());
      if (*lmax + 1 != *rmin && *rmax + 1 != *lmin) ++non_adjacent;
      for (auto r : right) part[r] = part[left.front()];
      const double next = potential_phi(partition(), sim);
      const double lhs = m.score + 0.5 * (next - phi);
      worst = std::min(worst, lhs);
      if (lhs < -1e-12) ++violations;
      phi = next;
      ++merges;
    }
  }
  return {violations == 0 && non_adjacent == 0,
          fmt::format("{} merges, {} violations, {} non-adjacent, min step value {:.3e}", merges,
                      violations, non_adjacent, worst)};
}

Outcome random_cut_half_max_upper() {
  const auto instances = one_d_instances(20, 3, 30, 303);
  std::size_t failures = 0;
  double worst = 1e300;
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& inst = instances[k];
    const auto sim = SimilarityView::lazy(inst.points, GaussianKernel{inst.sigma});
    const auto mc = expected_f_plus(RandomizedAlgorithm::kRandomCut, inst.points, sim, 10'000,
                                    RandomSeed{9000 + k});
    const double bound = one_d_bounds(inst.points.coords(), GaussianKernel{inst.sigma}).max_upper;
    if (mc.mean < 0.5 * bound - 3.0 * mc.std_error) ++failures;
    if (bound > 0) worst = std::min(worst, mc.mean / bound);
  }
  return {failures == 0, fmt::format("20 instances x 10^4 runs, {} violations, min E[F+]/1D-MAX-upper = {:.4f}",
                                     failures, worst)};
}

Outcome projected_random_cut_guarantee() {
  std::mt19937_64 rng(404);
  const std::size_t dims[] = {2, 8, 64};
  std::size_t failures = 0;
  double worst_margin = 1e300;
  double min_delta = 1.0;
  for (std::size_t k = 0; k < 20; ++k) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(3, 15)(rng);
    const std::size_t d = dims[k % 3];
    const auto pts = random_gaussian_cloud(n, d, RandomSeed{rng()});
    double diameter2 = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        diameter2 = std::max(diameter2, squared_distance(pts.point(i), pts.point(j)));
    const double target = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const double sigma = std::sqrt(diameter2 / (2.0 * std::log(1.0 / target)));
    const double delta = delta_of(pts, sigma);
    min_delta = std::min(min_delta, delta);
    const auto sim = SimilarityView::lazy(pts, GaussianKernel{sigma});
    const auto mc = expected_f_plus(RandomizedAlgorithm::kProjectedRandomCut, pts, sim, 10'000,
                                    RandomSeed{rng()});
    const double bound = (1.0 + delta) / 3.0 * max_upper(sim).value;
    const double margin = (mc.mean + 3.0 * mc.std_error) / bound;
    worst_margin = std::min(worst_margin, margin);
    if (mc.mean < bound - 3.0 * mc.std_error) ++failures;
  }
  return {failures == 0 && min_delta >= 0.1 - 1e-12,
          fmt::format("20 clouds x 10^4 runs, min delta {:.3f}, {} violations, "
                      "min (mean + 3 se)/bound = {:.4f}",
                      min_delta, failures, worst_margin)};
}

Outcome triangle_shortest_edge() {
  std::mt19937_64 rng(505);
  double worst = 1.0;
  for (std::size_t t = 0; t < 50; ++t) {
    const auto pts = random_gaussian_cloud(3, 3, RandomSeed{rng()});
    const double d01 = squared_distance(pts.point(0), pts.point(1));
    const double d02 = squared_distance(pts.point(0), pts.point(2));
    const double d12 = squared_distance(pts.point(1), pts.point(2));
    // The point off the shortest edge must be split away first.
    std::size_t off = 2;
    if (d02 < d01 && d02 <= d12) off = 1;
    if (d12 < d01 && d12 < d02) off = 0;
    const RandomSeed base{rng()};
    std::size_t hits = 0;
    const std::size_t runs = 100'000;
    for (std::size_t k = 0; k < runs; ++k) {
      const auto tree = projected_random_cut(pts, base.derive(k));
      if (first_separated(tree, 0, 1, 2) == off) ++hits;
    }
    worst = std::min(worst, static_cast<double>(hits) / static_cast<double>(runs));
  }
  return {worst >= 1.0 / 3.0 - 0.01,
          fmt::format("50 triangles x 10^5 projections, min frequency {:.4f}", worst)};
}

Outcome four_point_ratios() {
  const double sigma = 1.0;
  const auto pts = four_point_instance(6.0, 1e-6);
  const auto sim = SimilarityView::lazy(pts, GaussianKernel{sigma});
  const double al = f_plus(average_linkage(sim).tree, sim);
  const auto opt = optimal_tree_bruteforce(sim);
  const auto bounds = one_d_bounds(pts.coords(), GaussianKernel{sigma});
  const double r_opt = al / opt.value;
  const double r_sum = al / bounds.sum_upper;
  return {r_opt >= 0.74 && r_opt <= 0.76 && r_sum >= 0.49 && r_sum <= 0.51,
          fmt::format("AL/OPT = {:.5f}, AL/1D-SUM-upper = {:.5f} (middle points shifted by 1e-6)",
                      r_opt, r_sum)};
}

Outcome graph_encoding() {
  std::mt19937_64 rng(707);
  std::size_t checked = 0;
  double worst_norm = 0, worst_ip = 0, worst_ratio = 0;
  bool two_valued = true;
  for (std::size_t g = 0; g < 10; ++g) {
    std::size_t nodes = 0;
    std::vector<Edge> edges;
    // Need at least one edge and one non-edge for a two-valued kernel.
    do {
      nodes = std::uniform_int_distribution<std::size_t>(3, 12)(rng);
      edges = random_graph(nodes, 0.5, RandomSeed{rng()});
    } while (edges.empty() || edges.size() == nodes * (nodes - 1) / 2);
    const std::set<Edge> edge_set(edges.begin(), edges.end());
    for (double eps : {0.5, 0.1, 0.01}) {
      const auto enc = encode_graph(nodes, edges, eps);
      const auto& p = enc.points;
      std::vector<double> weights;
      for (std::size_t u = 0; u < nodes; ++u) {
        double norm2 = 0.0;
        for (double c : p.point(u)) norm2 += c * c;
        worst_norm = std::max(worst_norm, std::abs(std::sqrt(norm2) - 1.0));
        for (std::size_t v = u + 1; v < nodes; ++v) {
          double ip = 0.0;
          for (std::size_t k = 0; k < p.dim(); ++k) ip += p.coord(u, k) * p.coord(v, k);
          const double expect = edge_set.count({u, v}) ? 1.0 / static_cast<double>(nodes) : 0.0;
          worst_ip = std::max(worst_ip, std::abs(ip - expect));
          weights.push_back(gaussian_weight(p.point(u), p.point(v), enc.sigma));
        }
      }
      std::sort(weights.begin(), weights.end());
      std::vector<double> distinct{weights.front()};
      for (double w : weights) {
        if (relative_gap(w, distinct.back()) > 1e-9) distinct.push_back(w);
      }
      if (distinct.size() != 2) two_valued = false;
      worst_ratio = std::max(worst_ratio, std::abs(distinct.front() / distinct.back() - eps));
      ++checked;
    }
  }
  return {worst_norm <= 1e-9 && worst_ip <= 1e-9 && two_valued && worst_ratio <= 1e-6,
          fmt::format("{} encodings, max |norm-1| {:.1e}, max inner-product error {:.1e}, "
                      "two-valued {}, max ratio error {:.1e}",
                      checked, worst_norm, worst_ip, two_valued, worst_ratio)};
}

double clique_al_ratio(const PointSet& pts, double sigma) {
  const auto sim = SimilarityView::lazy(pts, GaussianKernel{sigma}).materialized();
  const double f = f_plus(average_linkage(sim).tree, sim);
  return f / max_upper(sim, CubicGate{kDefaultCubicLimit, true}).value;
}

Outcome clique_embedding_ratio() {
  const double r64 = clique_al_ratio(clique_embed_instance(64, 0.1, 1.0, 4.0), 1.0);
  const double r729 = clique_al_ratio(clique_embed_instance(729, 0.1, 1.0, 4.0), 1.0);
  return {r729 <= 0.45 && r729 <= r64,
          fmt::format("AL/MAX-upper: n=64 {:.4f}, n=729 {:.4f} (threshold 0.45)", r64, r729)};
}

Outcome jl_robustness() {
  const std::size_t n = 729;
  const auto pts = clique_embed_instance(n, 0.1, 1.0, 4.0);
  const double base = clique_al_ratio(pts, 1.0);
  const auto target = static_cast<std::size_t>(std::ceil(40.0 * std::log(static_cast<double>(n))));
  std::vector<double> ratios;
  for (std::uint64_t s = 0; s < 5; ++s) {
    ratios.push_back(clique_al_ratio(jl_project(pts, target, RandomSeed{1000 + s}), 1.0));
  }
  std::sort(ratios.begin(), ratios.end());
  const double median = ratios[2];
  return {std::abs(median - base) < 0.03,
          fmt::format("dim {} -> {}, ratio {:.4f} -> median {:.4f} (change {:.4f})", pts.dim(),
                      target, base, median, std::abs(median - base))};
}

Outcome greedy_equals_single_linkage() {
  std::mt19937_64 rng(1010);
  std::size_t equal = 0;
  for (std::size_t t = 0; t < 100; ++t) {
    PointSet pts = PointSet::from_1d(std::vector<double>{0.0});
    for (;;) {
      const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 40)(rng);
      pts = random_1d(n, 0.0, 10.0, RandomSeed{rng()});
      std::set<double> gaps;
      for (std::size_t i = 0; i + 1 < n; ++i) gaps.insert(pts.coord(i + 1, 0) - pts.coord(i, 0));
      if (gaps.size() == n - 1) break;
    }
    const auto sim = SimilarityView::lazy(pts, GaussianKernel{1.0});
    if (same_hierarchy(greedy_cut(pts.coords()), single_linkage(sim))) ++equal;
  }
  return {equal == 100, fmt::format("{}/100 instances give the same hierarchy", equal)};
}

Outcome spaced_line_gap() {
  const auto pts = spaced_line_instance(32, 6.0, 0.01, 1.0);
  const auto sim = SimilarityView::lazy(pts, GaussianKernel{1.0});
  const double sl = f_plus(single_linkage(sim), sim);
  const double al = f_plus(average_linkage(sim).tree, sim);
  const double r = sl / al;
  return {r >= 0.40 && r <= 0.60, fmt::format("SL/AL = {:.4f}", r)};
}

Outcome oracle_consistency() {
  std::mt19937_64 rng(1212);
  std::size_t instances = 0, violations = 0;
  double worst_triple = 0.0;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t rep = 0; rep < 10; ++rep) {
      const std::size_t d = rep % 2 ? 2 : 1;
      const auto pts = d == 1 ? random_1d(n, 0.0, 5.0, RandomSeed{rng()})
                              : random_gaussian_cloud(n, d, RandomSeed{rng()});
      const double sigma = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
      const auto sim = SimilarityView::lazy(pts, GaussianKernel{sigma});
      const auto opt = optimal_tree_bruteforce(sim);
      const double upper = max_upper(sim).value;
      std::vector<Dendrogram> trees;
      trees.push_back(projected_random_cut(pts, RandomSeed{rng()}));
      trees.push_back(average_linkage(sim).tree);
      trees.push_back(single_linkage(sim));
      if (d == 1) {
        trees.push_back(random_cut(pts.coords(), RandomSeed{rng()}));
        trees.push_back(greedy_cut(pts.coords()));
      }
      const double tol = 1e-9 * std::max(1.0, upper);
      if (opt.value > upper + tol) ++violations;
      for (const auto& t : trees) {
        const double f = f_plus(t, sim);
        if (f > opt.value + tol) ++violations;
        if (n >= 3) worst_triple = std::max(worst_triple, relative_gap(f, f_plus_triplewise(t, sim)));
      }
      ++instances;
    }
  }
  return {violations == 0 && worst_triple <= 1e-9,
          fmt::format("{} instances, {} order violations, max F+ vs triplewise gap {:.1e}",
                      instances, violations, worst_triple)};
}

Outcome zoo_trend() {
  const auto zoo = io::read_points_csv(std::string(EHC_TEST_DATA_DIR) + "/zoo.csv",
                                       io::CsvOptions{true, 0})
                       .points;
  std::vector<double> prc_ratio;
  std::string table;
  bool in_range = true;
  bool beats_al = true;
  for (double sigma = 1.5; sigma <= 5.0 + 1e-9; sigma += 0.5) {
    const auto sim = SimilarityView::lazy(zoo, GaussianKernel{sigma}).materialized();
    const double upper = max_upper(sim).value;
    const auto mc = expected_f_plus(RandomizedAlgorithm::kProjectedRandomCut, zoo, sim, 10,
                                    RandomSeed{1313});
    const double al = f_plus(average_linkage(sim).tree, sim);
    const double r = mc.mean / upper;
    prc_ratio.push_back(r);
    in_range = in_range && r >= 0.70 && r <= 0.95;
    beats_al = beats_al && mc.mean > al;
    table += fmt::format(" s={:.1f}:PRC/MAX={:.3f},PRC={:.0f},AL={:.0f};", sigma, r, mc.mean, al);
  }
  const bool monotone = std::is_sorted(prc_ratio.begin(), prc_ratio.end());
  return {monotone && in_range && beats_al,
          fmt::format("n={} non-decreasing {}, in [0.70,0.95] {}, PRC > AL {};{}", zoo.size(),
                      monotone, in_range, beats_al, table)};
}

std::size_t prc_aux_bytes(std::size_t n, std::size_t dim) {
  const auto pts = random_gaussian_cloud(n, dim, RandomSeed{1414});
  alloc_counter::reset_peak();
  const std::size_t before = alloc_counter::live_bytes();
  {
    const auto tree = projected_random_cut(pts, RandomSeed{7});
    if (tree.leaf_count() != n) std::abort();
  }
  return alloc_counter::peak_bytes() - before;
}

Outcome table2_scaling() {
  cli::BenchOptions options;
  options.sizes = {10'000, 100'000, 1'000'000};
  options.dim = 128;
  options.seed = RandomSeed{1415};
  options.repeats = 11;
  const auto rows = cli::run_bench(options);
  const double r1 = rows[1].prc_seconds / rows[0].prc_seconds;
  const double r2 = rows[2].prc_seconds / rows[1].prc_seconds;
  bool pass_le_prc = true;
  for (const auto& r : rows) pass_le_prc = pass_le_prc && r.pass_seconds <= r.prc_seconds;

  const double per_point_small = static_cast<double>(prc_aux_bytes(100'000, 128)) / 1e5;
  const double per_point_large = static_cast<double>(prc_aux_bytes(1'000'000, 128)) / 1e6;
  const double per_point_thin = static_cast<double>(prc_aux_bytes(1'000'000, 2)) / 1e6;
  // Linear in n and unaffected by d: bytes per point stay flat across sizes
  // and dimensions, and far below the 1024 bytes per point of the input.
  const bool linear = per_point_large <= 1.25 * per_point_small && per_point_large <= 256.0 &&
                      per_point_large <= 1.25 * per_point_thin;
  return {r1 <= 15.0 && r2 <= 15.0 && linear,
          fmt::format("prc s: 10k {:.4f}, 100k {:.4f}, 1M {:.4f}; ratios {:.2f}, {:.2f}; "
                      "pass <= prc {}; aux bytes/point: 100k {:.1f}, 1M {:.1f}, 1M d=2 {:.1f}",
                      rows[0].prc_seconds, rows[1].prc_seconds, rows[2].prc_seconds, r1, r2,
                      pass_le_prc, per_point_small, per_point_large, per_point_thin)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "average-linkage reaches half of 1D-SUM-upper", 10, average_linkage_half_sum_upper},
      {2, "average-linkage potential step inequality", 0, average_linkage_potential_step},
      {3, "random cut reaches half of 1D-MAX-upper in expectation", 60, random_cut_half_max_upper},
      {4, "projected random cut reaches (1+delta)/3 of MAX-upper", 120,
       projected_random_cut_guarantee},
      {5, "projection keeps the shortest triangle edge with frequency >= 1/3", 0,
       triangle_shortest_edge},
      {6, "four-point instance ratios", 0, four_point_ratios},
      {7, "graph encoding norms, inner products and kernel ratio", 0, graph_encoding},
      {8, "clique embedding average-linkage ratio", 300, clique_embedding_ratio},
      {9, "clique embedding ratio survives random projection", 0, jl_robustness},
      {10, "greedy cut and single-linkage agree", 0, greedy_equals_single_linkage},
      {11, "spaced line single-linkage vs average-linkage", 0, spaced_line_gap},
      {12, "algorithms <= brute-force optimum <= MAX-upper", 0, oracle_consistency},
      {13, "Zoo ratio trend across bandwidths", 0, zoo_trend},
      {14, "PRC scaling and auxiliary memory", 0, table2_scaling},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only.insert(std::atoi(argv[++i]));
  }
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit_seconds > 0 && secs > c.time_limit_seconds) {
      o.pass = false;
      o.detail += fmt::format("; exceeded {:.0f} s", c.time_limit_seconds);
    }
    std::printf("%s criterion %2d: %s | %s | %.2fs\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
