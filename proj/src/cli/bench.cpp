#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>

#include <fmt/format.h>

#include "ehc/algorithms.hpp"
#include "ehc/cli.hpp"
#include "ehc/instances.hpp"

namespace ehc::cli {

namespace {

using Clock = std::chrono::steady_clock;

double median(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t m = xs.size() / 2;
  return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

template <class Fn>
double time_seconds(Fn fn) {
  const auto start = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

std::vector<std::size_t> parse_sizes(std::string_view list) {
  std::vector<std::size_t> sizes;
  std::size_t start = 0;
  for (;;) {
    const auto comma = list.find(',', start);
    auto item = list.substr(start, comma == std::string_view::npos ? comma : comma - start);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) {
      item.remove_prefix(1);
    }
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) {
      item.remove_suffix(1);
    }
    std::size_t multiplier = 1;
    if (!item.empty()) {
      const char suffix = static_cast<char>(std::tolower(static_cast<unsigned char>(item.back())));
      if (suffix == 'k') multiplier = 1'000;
      if (suffix == 'm') multiplier = 1'000'000;
      if (multiplier != 1) item.remove_suffix(1);
    }
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value == 0) {
      throw std::invalid_argument("--sizes: '" + std::string(item) +
                                  "' is not a positive size");
    }
    sizes.push_back(value * multiplier);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return sizes;
}

std::vector<BenchRow> run_bench(const BenchOptions& options) {
  if (options.sizes.empty()) throw std::invalid_argument("bench: no sizes given");
  if (options.repeats == 0) throw std::invalid_argument("bench: repeats must be >= 1");
  const std::size_t largest = *std::max_element(options.sizes.begin(), options.sizes.end());

  std::optional<PointSet> loaded;
  double io_seconds = 0.0;
  if (options.input) {
    io_seconds = time_seconds([&] { loaded = io::read_points_csv(*options.input, options.csv).points; });
    if (loaded->size() < largest) {
      throw std::invalid_argument(fmt::format("bench: input has {} rows but size {} was requested",
                                              loaded->size(), largest));
    }
  }

  std::vector<BenchRow> rows;
  for (std::size_t s = 0; s < options.sizes.size(); ++s) {
    const std::size_t size = options.sizes[s];
    const PointSet points = loaded ? loaded->head(size)
                                   : random_gaussian_cloud(size, options.dim,
                                                           options.seed.derive(s));
    std::vector<double> pass;
    std::vector<double> prc;
    for (std::size_t r = 0; r < options.repeats; ++r) {
      const RandomSeed seed = options.seed.derive(1'000'000 + r);
      auto engine = seed.engine();
      const auto direction = gaussian_direction(points.dim(), engine);
      pass.push_back(time_seconds([&] {
        const auto x = project(points, direction);
        if (x.size() != points.size()) throw std::logic_error("bench: projection size");
      }));
      prc.push_back(time_seconds([&] {
        const auto tree = projected_random_cut(points, seed);
        if (tree.leaf_count() != points.size()) throw std::logic_error("bench: tree size");
      }));
    }
    BenchRow row{size, median(pass), median(prc)};
    if (options.include_io) {
      row.pass_seconds += io_seconds;
      row.prc_seconds += io_seconds;
    }
    rows.push_back(row);
  }
  return rows;
}

std::string bench_to_csv(std::span<const BenchRow> rows) {
  std::string out = "size,pass_seconds,prc_seconds\n";
  for (const auto& r : rows) {
    out += fmt::format("{},{},{}\n", r.size, io::format_double(r.pass_seconds),
                       io::format_double(r.prc_seconds));
  }
  return out;
}

}  // namespace ehc::cli
