#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "ehc/instances.hpp"

namespace ehc {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

std::size_t integer_cube_root(std::size_t n) {
  auto k = static_cast<std::size_t>(std::llround(std::cbrt(static_cast<double>(n))));
  while (k * k * k > n) --k;
  while ((k + 1) * (k + 1) * (k + 1) <= n) ++k;
  return k;
}

}  // namespace

PointSet four_point_instance(double delta, double middle_shift) {
  require(delta > 0.0 && std::isfinite(delta), "four_point_instance: delta must be > 0");
  require(middle_shift >= 0.0 && middle_shift < 0.5 * delta,
          "four_point_instance: middle_shift must lie in [0, delta/2)");
  const double xs[] = {0.0, delta + middle_shift, 2.0 * delta - middle_shift, 3.0 * delta};
  return PointSet::from_1d(xs);
}

PointSet spaced_line_instance(std::size_t n, double delta, double epsilon, double sigma) {
  require(n >= 3, "spaced_line_instance: n must be >= 3");
  require(delta > 0.0, "spaced_line_instance: delta must be > 0");
  require(sigma > 0.0, "spaced_line_instance: sigma must be > 0");
  require(epsilon > 0.0 && epsilon < 1.0 / static_cast<double>(n),
          "spaced_line_instance: epsilon must lie in (0, 1/n)");
  std::vector<double> xs(n, 0.0);
  // Gap i (1-based) solves exp(-g^2 / 2 sigma^2) = (1 - (i-1) eps) exp(-delta^2 / 2 sigma^2).
  for (std::size_t i = 1; i < n; ++i) {
    const double factor = 1.0 - static_cast<double>(i - 1) * epsilon;
    const double gap = std::sqrt(delta * delta - 2.0 * sigma * sigma * std::log(factor));
    xs[i] = xs[i - 1] + gap;
  }
  return PointSet::from_1d(xs);
}

double clique_delta(std::size_t n, double sigma, double c) {
  return std::sqrt(2.0 * sigma * sigma * c * std::log(static_cast<double>(n)));
}

PointSet clique_embed_instance(std::size_t n, double tau, double sigma, double c) {
  require(n >= 1, "clique_embed_instance: n must be >= 1");
  const std::size_t k = integer_cube_root(n);
  require(k * k * k == n, "clique_embed_instance: n = " + std::to_string(n) +
                              " is not a perfect cube");
  require(tau > 0.0, "clique_embed_instance: tau must be > 0");
  require(sigma > 0.0, "clique_embed_instance: sigma must be > 0");
  require(c > 1.0, "clique_embed_instance: c must be > 1");
  const std::size_t rows = k;
  const std::size_t cols = k * k;
  const std::size_t dim = rows + cols;
  const double big = clique_delta(n, sigma, c);
  std::vector<double> coords(n * dim, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      double* v = coords.data() + (i * cols + j) * dim;
      v[i] = big;
      v[rows + j] = big * (1.0 + tau);
    }
  }
  return PointSet(n, dim, std::move(coords));
}

EncodedGraph encode_graph(std::size_t nodes, std::span<const Edge> edges, double epsilon) {
  require(nodes >= 1, "encode_graph: need at least one node");
  require(epsilon > 0.0 && epsilon < 1.0, "encode_graph: epsilon must lie in (0, 1)");
  const std::size_t pairs = nodes * (nodes - 1) / 2;
  const std::size_t dim = pairs + nodes;
  auto pair_index = [nodes](std::size_t u, std::size_t v) {
    // Row-major position of (u, v), u < v, in the strict upper triangle.
    return u * (2 * nodes - u - 1) / 2 + (v - u - 1);
  };

  std::set<Edge> seen;
  std::vector<std::size_t> degree(nodes, 0);
  for (const auto& [a, b] : edges) {
    require(a < nodes && b < nodes, "encode_graph: edge endpoint out of range");
    require(a != b, "encode_graph: self-loop at node " + std::to_string(a));
    const Edge e{std::min(a, b), std::max(a, b)};
    require(seen.insert(e).second, "encode_graph: repeated edge (" + std::to_string(e.first) +
                                       ", " + std::to_string(e.second) + ")");
    ++degree[a];
    ++degree[b];
  }

  // k_v = sqrt(1 - d_v/n) z_v + sqrt(1/n) sum_{e incident to v} x_e, with x_e
  // and z_v distinct standard basis vectors.
  const auto nd = static_cast<double>(nodes);
  const double edge_coord = std::sqrt(1.0 / nd);
  std::vector<double> coords(nodes * dim, 0.0);
  for (const auto& [u, v] : seen) {
    const std::size_t e = pair_index(u, v);
    coords[u * dim + e] = edge_coord;
    coords[v * dim + e] = edge_coord;
  }
  for (std::size_t v = 0; v < nodes; ++v) {
    coords[v * dim + pairs + v] = std::sqrt(1.0 - static_cast<double>(degree[v]) / nd);
  }
  return {PointSet(nodes, dim, std::move(coords)), 1.0 / std::sqrt(nd * std::log(1.0 / epsilon))};
}

PointSet jl_project(const PointSet& points, std::size_t target_dim, RandomSeed seed) {
  require(target_dim >= 1, "jl_project: target_dim must be >= 1");
  const std::size_t n = points.size();
  const std::size_t d = points.dim();
  auto engine = seed.engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  const double scale = 1.0 / std::sqrt(static_cast<double>(target_dim));
  std::vector<double> matrix(target_dim * d);
  for (auto& m : matrix) m = normal(engine) * scale;

  std::vector<double> out(n * target_dim);
  const double* v = points.coords().data();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t si = 0; si < static_cast<std::ptrdiff_t>(n); ++si) {
    const auto i = static_cast<std::size_t>(si);
    const double* row = v + i * d;
    for (std::size_t r = 0; r < target_dim; ++r) {
      const double* m = matrix.data() + r * d;
      double s = 0.0;
      for (std::size_t k = 0; k < d; ++k) s += m[k] * row[k];
      out[i * target_dim + r] = s;
    }
  }
  return PointSet(n, target_dim, std::move(out));
}

PointSet random_1d(std::size_t n, double lo, double hi, RandomSeed seed) {
  require(n >= 1, "random_1d: n must be >= 1");
  require(lo < hi && std::isfinite(lo) && std::isfinite(hi), "random_1d: need lo < hi");
  auto engine = seed.engine();
  std::vector<double> xs(n);
  for (auto& x : xs) x = lo + uniform01(engine) * (hi - lo);
  std::sort(xs.begin(), xs.end());
  return PointSet::from_1d(xs);
}

PointSet random_gaussian_cloud(std::size_t n, std::size_t dim, RandomSeed seed) {
  require(n >= 1 && dim >= 1, "random_gaussian_cloud: n and dim must be >= 1");
  auto engine = seed.engine();
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> coords(n * dim);
  for (auto& c : coords) c = normal(engine);
  return PointSet(n, dim, std::move(coords));
}

std::vector<Edge> random_graph(std::size_t nodes, double p, RandomSeed seed) {
  require(p >= 0.0 && p <= 1.0, "random_graph: p must lie in [0, 1]");
  auto engine = seed.engine();
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < nodes; ++u) {
    for (std::size_t v = u + 1; v < nodes; ++v) {
      if (uniform01(engine) < p) edges.emplace_back(u, v);
    }
  }
  return edges;
}

GeneratedInstance generate(const InstanceSpec& spec) {
  return std::visit(
      [&](const auto& f) -> GeneratedInstance {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, FourPointSpec>) {
          return {four_point_instance(f.delta, f.middle_shift), f.sigma, true};
        } else if constexpr (std::is_same_v<T, SpacedLineSpec>) {
          return {spaced_line_instance(f.n, f.delta, f.epsilon, f.sigma), f.sigma, true};
        } else if constexpr (std::is_same_v<T, CliqueEmbedSpec>) {
          return {clique_embed_instance(f.n, f.tau, f.sigma, f.c), f.sigma, false};
        } else if constexpr (std::is_same_v<T, GraphEncodeSpec>) {
          auto encoded = encode_graph(f.nodes, f.edges, f.epsilon);
          return {std::move(encoded.points), encoded.sigma, false};
        } else if constexpr (std::is_same_v<T, Random1DSpec>) {
          return {random_1d(f.n, f.lo, f.hi, spec.seed), std::nullopt, true};
        } else {
          return {random_gaussian_cloud(f.n, f.dim, spec.seed), std::nullopt, false};
        }
      },
      spec.family);
}

}  // namespace ehc
