#pragma once

// Serialization: trees (JSON and Newick), point and weight CSV files,
// objective reports, algorithm traces and instance descriptors.
//
// Output is byte-stable: JSON keys are written in a fixed order and doubles
// with 17 significant digits.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ehc/algorithms.hpp"
#include "ehc/core.hpp"
#include "ehc/instances.hpp"
#include "ehc/kernels.hpp"
#include "ehc/objectives.hpp"

namespace ehc::io {

/// Malformed input text. The message names the row or position.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

/// "%.17g"; NaN and infinities become "null".
std::string format_double(double x);

/// Minimal streaming JSON writer. Keys appear in call order.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(std::uint64_t x);
  JsonWriter& value(std::int64_t x);
  JsonWriter& value(bool x);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();
  /// Inserts pre-rendered JSON as one value.
  JsonWriter& raw(std::string_view json);

  template <class T>
  JsonWriter& field(std::string_view k, const T& v) {
    key(k);
    if constexpr (std::is_floating_point_v<T>) {
      return value(static_cast<double>(v));
    } else if constexpr (std::is_same_v<T, bool>) {
      return value(v);
    } else if constexpr (std::is_unsigned_v<T>) {
      return value(static_cast<std::uint64_t>(v));
    } else if constexpr (std::is_integral_v<T>) {
      return value(static_cast<std::int64_t>(v));
    } else {
      return value(std::string_view(v));
    }
  }

  const std::string& str() const { return out_; }

 private:
  void separate();
  void append_string(std::string_view s);

  std::string out_;
  std::vector<bool> first_;  // per open container: no element written yet
  bool after_key_ = false;
};

// Trees.

/// Nested {"left": ..., "right": ...} / {"leaf": i}, no whitespace.
std::string tree_to_json(const Dendrogram& tree);
/// "(A,B);" with leaf indices as labels and no branch lengths.
std::string tree_to_newick(const Dendrogram& tree);
Dendrogram parse_tree_json(std::string_view text);
Dendrogram parse_newick(std::string_view text);
/// JSON when the first non-blank character is '{', Newick otherwise.
Dendrogram parse_tree(std::string_view text);

// CSV.

struct CsvOptions {
  bool header = false;
  std::optional<std::size_t> label_col;  // 0-based column holding row labels
};

struct LabeledPoints {
  PointSet points;
  std::vector<std::string> labels;        // empty without a label column
  std::vector<std::string> column_names;  // empty without a header
};

/// Rows of comma-separated numbers. Blank lines are skipped. Throws
/// ParseError naming the 1-based line for ragged rows or non-numeric cells,
/// and std::invalid_argument for input without data rows.
LabeledPoints parse_points_csv(std::string_view text, const CsvOptions& options = {});
LabeledPoints read_points_csv(const std::filesystem::path& path, const CsvOptions& options = {});

std::string points_to_csv(const PointSet& points);

/// Square matrix of weights in [0, 1]; symmetry is checked to 1e-9 and the
/// result symmetrised.
SimilarityView parse_matrix_csv(std::string_view text,
                                std::size_t materialize_limit = kDefaultMaterializeLimit);

// Reports, traces and descriptors.

std::string report_to_json(const ObjectiveReport& report);

/// One JSON object per line: merges first, then splits.
std::string trace_to_jsonl(const AlgorithmTrace& trace);

std::string spec_to_json(const InstanceSpec& spec);
InstanceSpec parse_spec_json(std::string_view text);

}  // namespace ehc::io
