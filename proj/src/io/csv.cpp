#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "ehc/io.hpp"

namespace ehc::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_cells(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    cells.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

// Calls fn(line_number, line) for every non-blank line.
template <class Fn>
void for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    const auto line = trim(text.substr(start, nl == std::string_view::npos ? nl : nl - start));
    ++line_no;
    if (!line.empty()) fn(line_no, line);
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
}

double parse_number(std::string_view cell, std::size_t line_no, std::size_t col) {
  double value = 0.0;
  const char* first = cell.data();
  const char* last = cell.data() + cell.size();
  if (!cell.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (cell.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(fmt::format("line {}, column {}: '{}' is not a number", line_no, col + 1,
                                 cell));
  }
  if (!std::isfinite(value)) {
    throw ParseError(fmt::format("line {}, column {}: value is not finite", line_no, col + 1));
  }
  return value;
}

}  // namespace

LabeledPoints parse_points_csv(std::string_view text, const CsvOptions& options) {
  std::vector<double> coords;
  std::vector<std::string> labels;
  std::vector<std::string> names;
  std::size_t width = 0;  // cells per row, label included
  std::size_t rows = 0;
  bool header_pending = options.header;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto cells = split_cells(line);
    if (options.label_col && *options.label_col >= cells.size()) {
      throw ParseError(fmt::format("line {}: label column {} out of range ({} columns)", line_no,
                                   *options.label_col, cells.size()));
    }
    if (header_pending) {
      header_pending = false;
      width = cells.size();
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (!options.label_col || c != *options.label_col) names.emplace_back(cells[c]);
      }
      return;
    }
    if (width == 0) width = cells.size();
    if (cells.size() != width) {
      throw ParseError(fmt::format("line {}: expected {} columns, found {}", line_no, width,
                                   cells.size()));
    }
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (options.label_col && c == *options.label_col) {
        labels.emplace_back(cells[c]);
      } else {
        coords.push_back(parse_number(cells[c], line_no, c));
      }
    }
    ++rows;
  });
  if (rows == 0) throw std::invalid_argument("CSV input has no data rows");
  const std::size_t dim = coords.size() / rows;
  if (dim == 0) throw std::invalid_argument("CSV input has no numeric columns");
  return {PointSet(rows, dim, std::move(coords)), std::move(labels), std::move(names)};
}

LabeledPoints read_points_csv(const std::filesystem::path& path, const CsvOptions& options) {
  return parse_points_csv(read_file(path), options);
}

std::string points_to_csv(const PointSet& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto row = points.point(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) out += ',';
      out += format_double(row[k]);
    }
    out += '\n';
  }
  return out;
}

SimilarityView parse_matrix_csv(std::string_view text, std::size_t materialize_limit) {
  const auto parsed = parse_points_csv(text);
  const auto& m = parsed.points;
  if (m.size() != m.dim()) {
    throw ParseError(fmt::format("weight matrix: {} rows but {} columns", m.size(), m.dim()));
  }
  std::vector<double> w(m.coords().begin(), m.coords().end());
  return SimilarityView::from_matrix(m.size(), std::move(w), materialize_limit);
}

}  // namespace ehc::io
