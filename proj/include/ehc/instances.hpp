#pragma once

// Instance generators: the adversarial constructions for average-linkage and
// single-linkage, the clique embedding, the graph-to-kernel encoding, random
// projections and plain random fixtures. All are pure functions of their
// parameters and seed.

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ehc/core.hpp"
#include "ehc/kernels.hpp"

namespace ehc {

/// {0, delta, 2 delta, 3 delta}. A positive `middle_shift` moves the two
/// middle points toward each other by that amount, which makes the middle
/// pair the unique closest one.
PointSet four_point_instance(double delta, double middle_shift = 0.0);

/// n points on a line whose adjacent Gaussian weights (bandwidth sigma) are
/// (1 - (i-1) epsilon) exp(-delta^2 / 2 sigma^2) for i = 1..n-1.
/// Requires n >= 3, delta > 0, 0 < epsilon < 1/n, sigma > 0.
PointSet spaced_line_instance(std::size_t n, double delta, double epsilon, double sigma);

/// Delta with Delta^2 = 2 sigma^2 c ln n.
double clique_delta(std::size_t n, double sigma, double c);

/// n = k^3 points v_{i,j} = Delta (e_i + (1 + tau) e_{k+j}) in R^{k + k^2}
/// for i in [0, k) and j in [0, k^2); point i * k^2 + j. Delta comes from
/// clique_delta. Throws std::invalid_argument when n is not a perfect cube.
PointSet clique_embed_instance(std::size_t n, double tau, double sigma, double c = 4.0);

struct EncodedGraph {
  PointSet points;  // unit vectors, one per node
  double sigma;     // bandwidth making w_nonedge = epsilon * w_edge
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Unit vectors with <k_u, k_v> = 1/n on edges and 0 otherwise, in
/// dimension C(n, 2) + n, plus the bandwidth (n ln(1/epsilon))^{-1/2}.
/// Throws std::invalid_argument on self-loops, repeated edges, endpoints out
/// of range or epsilon outside (0, 1).
EncodedGraph encode_graph(std::size_t nodes, std::span<const Edge> edges, double epsilon);

/// Multiplies every point by a target_dim x d matrix of independent standard
/// normals scaled by 1/sqrt(target_dim).
PointSet jl_project(const PointSet& points, std::size_t target_dim, RandomSeed seed);

/// n uniform points in [lo, hi), returned in ascending order.
PointSet random_1d(std::size_t n, double lo, double hi, RandomSeed seed);

/// n independent standard normal vectors in R^dim.
PointSet random_gaussian_cloud(std::size_t n, std::size_t dim, RandomSeed seed);

/// Erdos-Renyi graph G(nodes, p), edges listed with u < v in lexicographic order.
std::vector<Edge> random_graph(std::size_t nodes, double p, RandomSeed seed);

// Parametric descriptions, used by the `gen` command and JSON descriptors.

struct FourPointSpec {
  double delta = 1.0;
  double middle_shift = 0.0;
  double sigma = 1.0;
};
struct SpacedLineSpec {
  std::size_t n = 32;
  double delta = 6.0;
  double epsilon = 0.01;
  double sigma = 1.0;
};
struct CliqueEmbedSpec {
  std::size_t n = 64;
  double tau = 0.1;
  double sigma = 1.0;
  double c = 4.0;
};
struct GraphEncodeSpec {
  std::size_t nodes = 4;
  std::vector<Edge> edges;
  double epsilon = 0.1;
};
struct Random1DSpec {
  std::size_t n = 100;
  double lo = 0.0;
  double hi = 1.0;
};
struct GaussianCloudSpec {
  std::size_t n = 100;
  std::size_t dim = 2;
};

using InstanceFamily = std::variant<FourPointSpec, SpacedLineSpec, CliqueEmbedSpec,
                                    GraphEncodeSpec, Random1DSpec, GaussianCloudSpec>;

struct InstanceSpec {
  InstanceFamily family;
  RandomSeed seed;
};

struct GeneratedInstance {
  PointSet points;
  std::optional<double> sigma;  // bandwidth the construction is built for
  bool sorted = false;          // 1D and ascending
};

GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace ehc
