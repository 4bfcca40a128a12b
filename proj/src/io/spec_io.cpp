#include <json.hpp>

#include "ehc/io.hpp"

namespace ehc::io {

namespace {

using nlohmann::json;

template <class T>
T get_or(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string("instance descriptor: bad value for \"") + key + "\"");
  }
}

}  // namespace

std::string spec_to_json(const InstanceSpec& spec) {
  JsonWriter w;
  w.begin_object();
  std::visit(
      [&](const auto& f) {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, FourPointSpec>) {
          w.field("family", "four_point").field("delta", f.delta);
          w.field("middle_shift", f.middle_shift).field("sigma", f.sigma);
        } else if constexpr (std::is_same_v<T, SpacedLineSpec>) {
          w.field("family", "spaced_line").field("n", f.n).field("delta", f.delta);
          w.field("epsilon", f.epsilon).field("sigma", f.sigma);
        } else if constexpr (std::is_same_v<T, CliqueEmbedSpec>) {
          w.field("family", "clique_embed").field("n", f.n).field("tau", f.tau);
          w.field("sigma", f.sigma).field("c", f.c);
        } else if constexpr (std::is_same_v<T, GraphEncodeSpec>) {
          w.field("family", "graph_encode").field("nodes", f.nodes);
          w.key("edges").begin_array();
          for (const auto& [u, v] : f.edges) {
            w.begin_array().value(std::uint64_t{u}).value(std::uint64_t{v}).end_array();
          }
          w.end_array();
          w.field("epsilon", f.epsilon);
        } else if constexpr (std::is_same_v<T, Random1DSpec>) {
          w.field("family", "random_1d").field("n", f.n).field("lo", f.lo).field("hi", f.hi);
        } else {
          w.field("family", "gaussian_cloud").field("n", f.n).field("dim", f.dim);
        }
      },
      spec.family);
  w.field("seed", spec.seed.value);
  w.end_object();
  return w.str();
}

InstanceSpec parse_spec_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance descriptor: ") + e.what());
  }
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    throw ParseError("instance descriptor: missing \"family\"");
  }
  InstanceSpec spec;
  spec.seed.value = get_or<std::uint64_t>(j, "seed", 0);
  const auto family = j.at("family").get<std::string>();
  if (family == "four_point") {
    FourPointSpec f;
    f.delta = get_or(j, "delta", f.delta);
    f.middle_shift = get_or(j, "middle_shift", f.middle_shift);
    f.sigma = get_or(j, "sigma", f.sigma);
    spec.family = f;
  } else if (family == "spaced_line") {
    SpacedLineSpec f;
    f.n = get_or(j, "n", f.n);
    f.delta = get_or(j, "delta", f.delta);
    f.epsilon = get_or(j, "epsilon", f.epsilon);
    f.sigma = get_or(j, "sigma", f.sigma);
    spec.family = f;
  } else if (family == "clique_embed") {
    CliqueEmbedSpec f;
    f.n = get_or(j, "n", f.n);
    f.tau = get_or(j, "tau", f.tau);
    f.sigma = get_or(j, "sigma", f.sigma);
    f.c = get_or(j, "c", f.c);
    spec.family = f;
  } else if (family == "graph_encode") {
    GraphEncodeSpec f;
    f.nodes = get_or(j, "nodes", f.nodes);
    f.epsilon = get_or(j, "epsilon", f.epsilon);
    f.edges = get_or(j, "edges", std::vector<Edge>{});
    spec.family = f;
  } else if (family == "random_1d") {
    Random1DSpec f;
    f.n = get_or(j, "n", f.n);
    f.lo = get_or(j, "lo", f.lo);
    f.hi = get_or(j, "hi", f.hi);
    spec.family = f;
  } else if (family == "gaussian_cloud") {
    GaussianCloudSpec f;
    f.n = get_or(j, "n", f.n);
    f.dim = get_or(j, "dim", f.dim);
    spec.family = f;
  } else {
    throw ParseError("instance descriptor: unknown family \"" + family + "\"");
  }
  return spec;
}

}  // namespace ehc::io
