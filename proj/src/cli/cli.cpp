#include <algorithm>
#include <iostream>
#include <memory>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ehc/algorithms.hpp"
#include "ehc/cli.hpp"
#include "ehc/instances.hpp"
#include "ehc/objectives.hpp"

namespace ehc::cli {

namespace {

struct InputOptions {
  std::string path;
  bool header = false;
  std::optional<std::size_t> label_col;
  bool matrix = false;
  double sigma = 1.0;
  std::size_t materialize_limit = kDefaultMaterializeLimit;
};

struct RunConfig {
  InputOptions input;
  std::string algo = "prc";
  std::uint64_t seed = 0;
  std::size_t repeats = 1;
  bool evaluate = false;
  std::string bounds = "all";
  std::string format = "json";
  std::string output;
  std::string trace_path;
  std::string tree_path;
  bool force_cubic = false;
  std::size_t cubic_limit = kDefaultCubicLimit;
  double perturb = 0.0;
};

// Points sit behind a pointer so the lazy view's reference survives moves.
struct Loaded {
  std::unique_ptr<PointSet> points;
  std::optional<SimilarityView> sim;
};

void add_input_flags(CLI::App& cmd, InputOptions& in) {
  cmd.add_option("input", in.path, "CSV of points (or weights with --matrix)")->required();
  cmd.add_flag("--header", in.header, "first row is a header");
  cmd.add_option("--label-col", in.label_col, "0-based column holding row labels");
  cmd.add_flag("--matrix", in.matrix, "input is an n x n weight matrix");
  cmd.add_option("--sigma", in.sigma, "Gaussian bandwidth")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--materialize-limit", in.materialize_limit,
                 "largest n for which O(n^2) work is allowed");
}

Loaded load(const InputOptions& in) {
  Loaded out;
  if (in.matrix) {
    out.sim = io::parse_matrix_csv(io::read_file(in.path), in.materialize_limit);
    return out;
  }
  io::CsvOptions csv{in.header, in.label_col};
  out.points = std::make_unique<PointSet>(io::read_points_csv(in.path, csv).points);
  out.sim = SimilarityView::lazy(*out.points, GaussianKernel{in.sigma}, in.materialize_limit);
  return out;
}

BoundSelection parse_bounds(const std::string& s) {
  if (s == "none") return BoundSelection::kNone;
  if (s == "max") return BoundSelection::kMax;
  if (s == "1d") return BoundSelection::kOneD;
  return BoundSelection::kAll;
}

std::string render_tree(const Dendrogram& tree, const std::string& format) {
  return format == "newick" ? io::tree_to_newick(tree) : io::tree_to_json(tree);
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text << '\n';
  } else {
    io::write_file(path, text + "\n");
  }
}

// Sorted order of one-dimensional points, stable on ties.
std::vector<std::size_t> sort_order(const PointSet& points) {
  const auto xs = points.coords();
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  return order;
}

void require_points(const Loaded& data, const std::string& algo) {
  if (!data.points) {
    throw std::invalid_argument("--algo " + algo + " needs point coordinates, not a matrix");
  }
}

void require_1d(const PointSet& points, const std::string& algo) {
  if (points.dim() != 1) {
    throw std::invalid_argument("--algo " + algo + " needs one-dimensional points, got d = " +
                                std::to_string(points.dim()));
  }
}

PointSet perturbed(const PointSet& points, double eps, RandomSeed seed) {
  auto engine = seed.engine();
  std::vector<double> coords(points.coords().begin(), points.coords().end());
  for (auto& c : coords) c += eps * (2.0 * uniform01(engine) - 1.0);
  return PointSet(points.size(), points.dim(), std::move(coords));
}

int cmd_cluster(const RunConfig& cfg, std::ostream& out) {
  const Loaded data = load(cfg.input);
  const SimilarityView& sim = *data.sim;
  const RandomSeed seed{cfg.seed};

  // Optional jitter applies to the clustering input only; scoring uses the
  // original data.
  std::optional<PointSet> jittered;
  std::optional<SimilarityView> jittered_sim;
  if (cfg.perturb > 0.0 && data.points) {
    jittered = perturbed(*data.points, cfg.perturb, seed.derive(~std::uint64_t{0}));
    jittered_sim = SimilarityView::lazy(*jittered, GaussianKernel{cfg.input.sigma},
                                        cfg.input.materialize_limit);
  }
  const PointSet* cluster_points = jittered ? &*jittered : data.points.get();
  const SimilarityView& cluster_sim = jittered_sim ? *jittered_sim : sim;

  AlgorithmTrace trace;
  std::optional<Dendrogram> tree;
  const auto& algo = cfg.algo;
  if (algo == "prc") {
    require_points(data, algo);
    tree = projected_random_cut(*cluster_points, seed);
  } else if (algo == "rc") {
    require_points(data, algo);
    require_1d(*cluster_points, algo);
    tree = random_cut_points(*cluster_points, seed);
  } else if (algo == "al") {
    auto result = average_linkage(cluster_sim);
    trace = std::move(result.trace);
    tree = std::move(result.tree);
  } else if (algo == "sl") {
    tree = single_linkage(cluster_sim);
  } else if (algo == "greedy") {
    require_points(data, algo);
    require_1d(*cluster_points, algo);
    const auto order = sort_order(*cluster_points);
    std::vector<double> sorted(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) sorted[p] = cluster_points->coord(order[p], 0);
    tree = greedy_cut(sorted, &trace).relabeled(order);
  } else {
    tree = optimal_tree_bruteforce(cluster_sim).tree;
  }

  emit(out, cfg.output, render_tree(*tree, cfg.format));
  if (!cfg.trace_path.empty()) io::write_file(cfg.trace_path, io::trace_to_jsonl(trace));

  if (cfg.evaluate) {
    std::optional<MonteCarloSummary> mc;
    if ((algo == "prc" || algo == "rc") && cfg.repeats > 1) {
      const auto kind = algo == "prc" ? RandomizedAlgorithm::kProjectedRandomCut
                                      : RandomizedAlgorithm::kRandomCut;
      mc = expected_f_plus(kind, *cluster_points, sim, cfg.repeats, seed);
    }
    ReportOptions options;
    options.bounds = parse_bounds(cfg.bounds);
    options.gate = {cfg.cubic_limit, cfg.force_cubic};
    out << io::report_to_json(make_report(*tree, sim, options, mc)) << '\n';
  }
  return kExitOk;
}

int cmd_evaluate(const RunConfig& cfg, std::ostream& out) {
  const Loaded data = load(cfg.input);
  const Dendrogram tree = io::parse_tree(io::read_file(cfg.tree_path));
  if (tree.leaf_count() != data.sim->size()) {
    throw std::invalid_argument(fmt::format("tree has {} leaves but the data has {} points",
                                            tree.leaf_count(), data.sim->size()));
  }
  ReportOptions options;
  options.bounds = parse_bounds(cfg.bounds);
  options.gate = {cfg.cubic_limit, cfg.force_cubic};
  out << io::report_to_json(make_report(tree, *data.sim, options)) << '\n';
  return kExitOk;
}

struct GenConfig {
  std::string family;
  std::string spec_path;
  std::string output;
  std::string descriptor_out;
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t dim = 2;
  std::size_t nodes = 4;
  double delta = 1.0;
  double shift = 0.0;
  double epsilon = 0.01;
  double sigma = 1.0;
  double tau = 0.1;
  double c = 4.0;
  double lo = 0.0;
  double hi = 1.0;
  double p = 0.5;
};

InstanceSpec spec_from_flags(const GenConfig& g) {
  InstanceSpec spec;
  spec.seed.value = g.seed;
  const auto& f = g.family;
  if (f == "four_point") {
    spec.family = FourPointSpec{g.delta, g.shift, g.sigma};
  } else if (f == "spaced_line") {
    spec.family = SpacedLineSpec{g.n ? g.n : 32, g.delta, g.epsilon, g.sigma};
  } else if (f == "clique_embed") {
    spec.family = CliqueEmbedSpec{g.n ? g.n : 64, g.tau, g.sigma, g.c};
  } else if (f == "graph_encode") {
    GraphEncodeSpec ge;
    ge.nodes = g.nodes;
    ge.epsilon = g.epsilon;
    ge.edges = random_graph(g.nodes, g.p, spec.seed);
    spec.family = ge;
  } else if (f == "random_1d") {
    spec.family = Random1DSpec{g.n ? g.n : 100, g.lo, g.hi};
  } else {
    spec.family = GaussianCloudSpec{g.n ? g.n : 100, g.dim};
  }
  return spec;
}

int cmd_gen(const GenConfig& g, std::ostream& out) {
  const InstanceSpec spec = g.spec_path.empty() ? spec_from_flags(g)
                                                : io::parse_spec_json(io::read_file(g.spec_path));
  const auto instance = generate(spec);
  const auto csv = io::points_to_csv(instance.points);
  if (g.output.empty() || g.output == "-") {
    out << csv;
  } else {
    io::write_file(g.output, csv);
  }
  if (!g.descriptor_out.empty()) io::write_file(g.descriptor_out, io::spec_to_json(spec) + "\n");
  return kExitOk;
}

int cmd_bench(const BenchOptions& options, const std::string& report_path, std::ostream& out) {
  const auto rows = run_bench(options);
  const auto csv = bench_to_csv(rows);
  if (report_path.empty() || report_path == "-") {
    out << csv;
  } else {
    io::write_file(report_path, csv);
    for (const auto& r : rows) out << fmt::format("size {} done\n", r.size);
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hierarchical clustering under the F+ objective"};
  app.name("ehc");
  app.require_subcommand(1);

  RunConfig cluster_cfg;
  auto* cluster = app.add_subcommand("cluster", "build a tree");
  add_input_flags(*cluster, cluster_cfg.input);
  cluster->add_option("--algo", cluster_cfg.algo, "algorithm")
      ->check(CLI::IsMember({"prc", "rc", "al", "sl", "greedy", "opt"}));
  cluster->add_option("--seed", cluster_cfg.seed, "random seed");
  cluster->add_option("--repeats", cluster_cfg.repeats, "Monte Carlo repeats for --evaluate")
      ->check(CLI::PositiveNumber);
  cluster->add_flag("--evaluate", cluster_cfg.evaluate, "print an objective report");
  cluster->add_option("--bounds", cluster_cfg.bounds, "bounds to compute")
      ->check(CLI::IsMember({"max", "1d", "all", "none"}));
  cluster->add_option("--format", cluster_cfg.format, "tree format")
      ->check(CLI::IsMember({"json", "newick"}));
  cluster->add_option("-o,--output", cluster_cfg.output, "tree output path (stdout by default)");
  cluster->add_option("--trace", cluster_cfg.trace_path, "write the merge/split trace (JSON lines)");
  cluster->add_flag("--force-cubic", cluster_cfg.force_cubic, "lift the MAX-upper size gate");
  cluster->add_option("--cubic-limit", cluster_cfg.cubic_limit, "MAX-upper size gate");
  cluster->add_option("--perturb", cluster_cfg.perturb,
                      "jitter coordinates by up to this amount before clustering")
      ->check(CLI::NonNegativeNumber);

  RunConfig eval_cfg;
  auto* evaluate = app.add_subcommand("evaluate", "score an existing tree");
  add_input_flags(*evaluate, eval_cfg.input);
  evaluate->add_option("--tree", eval_cfg.tree_path, "tree file (JSON or Newick)")->required();
  evaluate->add_option("--bounds", eval_cfg.bounds, "bounds to compute")
      ->check(CLI::IsMember({"max", "1d", "all", "none"}));
  evaluate->add_flag("--force-cubic", eval_cfg.force_cubic, "lift the MAX-upper size gate");
  evaluate->add_option("--cubic-limit", eval_cfg.cubic_limit, "MAX-upper size gate");

  GenConfig gen_cfg;
  auto* gen = app.add_subcommand("gen", "generate an instance as CSV");
  gen->add_option("family", gen_cfg.family, "instance family")
      ->check(CLI::IsMember({"four_point", "spaced_line", "clique_embed", "graph_encode",
                             "random_1d", "gaussian_cloud"}));
  gen->add_option("--spec", gen_cfg.spec_path, "JSON instance descriptor");
  gen->add_option("-o,--output", gen_cfg.output, "CSV output path (stdout by default)");
  gen->add_option("--descriptor", gen_cfg.descriptor_out, "also write the JSON descriptor");
  gen->add_option("--seed", gen_cfg.seed, "random seed");
  gen->add_option("--n", gen_cfg.n, "number of points");
  gen->add_option("--dim", gen_cfg.dim, "dimension (gaussian_cloud)");
  gen->add_option("--nodes", gen_cfg.nodes, "graph nodes (graph_encode)");
  gen->add_option("--p", gen_cfg.p, "edge probability (graph_encode)");
  gen->add_option("--delta", gen_cfg.delta, "spacing");
  gen->add_option("--shift", gen_cfg.shift, "middle-point shift (four_point)");
  gen->add_option("--epsilon", gen_cfg.epsilon, "epsilon");
  gen->add_option("--sigma", gen_cfg.sigma, "bandwidth the construction targets");
  gen->add_option("--tau", gen_cfg.tau, "tau (clique_embed)");
  gen->add_option("--c", gen_cfg.c, "c (clique_embed)");
  gen->add_option("--lo", gen_cfg.lo, "lower end (random_1d)");
  gen->add_option("--hi", gen_cfg.hi, "upper end (random_1d)");

  BenchOptions bench_opts;
  std::string sizes = "10k,100k";
  std::string bench_input;
  std::string report_path;
  bool bench_header = false;
  std::optional<std::size_t> bench_label;
  auto* bench = app.add_subcommand("bench", "time PRC against one data pass");
  bench->add_option("--sizes", sizes, "comma-separated sizes, k/m suffixes allowed");
  bench->add_option("--dim", bench_opts.dim, "dimension of the synthetic cloud")
      ->check(CLI::PositiveNumber);
  bench->add_option("--seed", bench_opts.seed.value, "random seed");
  bench->add_option("--repeats", bench_opts.repeats, "timing repeats (median reported)")
      ->check(CLI::PositiveNumber);
  bench->add_flag("--include-io", bench_opts.include_io, "add input parsing to the timings");
  bench->add_option("--input", bench_input, "CSV of points instead of a synthetic cloud");
  bench->add_flag("--header", bench_header, "input has a header row");
  bench->add_option("--label-col", bench_label, "0-based label column of the input");
  bench->add_option("--report", report_path, "timing CSV path (stdout by default)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }

  try {
    if (gen->parsed() && gen_cfg.family.empty() && gen_cfg.spec_path.empty()) {
      throw std::invalid_argument("gen: give a family or --spec");
    }
    if (bench->parsed()) {
      bench_opts.sizes = parse_sizes(sizes);
      if (!bench_input.empty()) bench_opts.input = bench_input;
      bench_opts.csv = {bench_header, bench_label};
    }
    if (cluster->parsed()) return cmd_cluster(cluster_cfg, out);
    if (evaluate->parsed()) return cmd_evaluate(eval_cfg, out);
    if (gen->parsed()) return cmd_gen(gen_cfg, out);
    return cmd_bench(bench_opts, report_path, out);
  } catch (const io::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const RefusedComputation& e) {
    err << "refused: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace ehc::cli
