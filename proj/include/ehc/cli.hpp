#pragma once

// Command-line front end. `run` is the whole program minus process setup,
// so tests drive it in-process with string streams.
//
//   ehc cluster  <data.csv> --algo {prc,rc,al,sl,greedy,opt} [--evaluate] ...
//   ehc evaluate <data.csv> --tree <tree.json|tree.nwk> ...
//   ehc gen      <family> [family parameters] [-o points.csv]
//   ehc bench    --sizes 10k,100k,1m [--dim 128] [--report timings.csv]
//
// Exit codes: 0 success, 1 I/O failure, 2 invalid input or a size gate.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ehc/core.hpp"
#include "ehc/io.hpp"

namespace ehc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitInvalid = 2;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "10k,100k,1m" -> {10000, 100000, 1000000}. Suffixes k and m (either
/// case) multiply by 10^3 and 10^6. Throws std::invalid_argument.
std::vector<std::size_t> parse_sizes(std::string_view list);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::size_t dim = 128;
  RandomSeed seed{};
  std::size_t repeats = 3;  // timings are the median over repeats
  bool include_io = false;
  std::optional<std::filesystem::path> input;  // synthetic cloud when absent
  io::CsvOptions csv;
};

struct BenchRow {
  std::size_t size = 0;
  double pass_seconds = 0.0;  // one projection pass over the data
  double prc_seconds = 0.0;   // full projected random cut
};

/// Times a data pass and a full PRC for every size. Throws
/// std::invalid_argument when the input has fewer rows than a requested size.
std::vector<BenchRow> run_bench(const BenchOptions& options);

/// Header "size,pass_seconds,prc_seconds", one row per size.
std::string bench_to_csv(std::span<const BenchRow> rows);

}  // namespace ehc::cli
