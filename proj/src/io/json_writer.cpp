#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "ehc/io.hpp"

namespace ehc::io {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading " + path.string());
  return std::move(buffer).str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw IoError("error writing " + path.string());
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  return fmt::format("{:.17g}", x);
}

void JsonWriter::separate() {
  if (after_key_) {
    after_key_ = false;
    return;
  }
  if (!first_.empty()) {
    if (!first_.back()) out_ += ',';
    first_.back() = false;
  }
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_ += '{';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_ += '[';
  first_.push_back(true);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  first_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::key(std::string_view k) {
  separate();
  append_string(k);
  out_ += ':';
  after_key_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(double x) {
  separate();
  out_ += format_double(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::uint64_t x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
  separate();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool x) {
  separate();
  out_ += x ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  separate();
  append_string(s);
  return *this;
}

void JsonWriter::append_string(std::string_view s) {
  out_ += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out_ += "\\\""; break;
      case '\\': out_ += "\\\\"; break;
      case '\n': out_ += "\\n"; break;
      case '\r': out_ += "\\r"; break;
      case '\t': out_ += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          out_ += fmt::format("\\u{:04x}", static_cast<unsigned>(ch));
        } else {
          out_ += ch;
        }
    }
  }
  out_ += '"';
}

JsonWriter& JsonWriter::null() {
  separate();
  out_ += "null";
  return *this;
}

JsonWriter& JsonWriter::raw(std::string_view json) {
  separate();
  out_ += json;
  return *this;
}

namespace {

void write_map(JsonWriter& w, std::string_view name, const std::map<std::string, double>& m) {
  w.key(name).begin_object();
  for (const auto& [k, v] : m) w.field(k, v);
  w.end_object();
}

}  // namespace

std::string report_to_json(const ObjectiveReport& report) {
  JsonWriter w;
  w.begin_object();
  w.field("n", report.n);
  w.field("f_plus", report.f_plus);
  if (report.f_minus) w.field("f_minus", *report.f_minus);
  write_map(w, "bounds", report.bounds);
  write_map(w, "ratios", report.ratios);
  w.key("skipped").begin_array();
  for (const auto& s : report.skipped) w.value(s);
  w.end_array();
  if (report.monte_carlo) {
    w.key("monte_carlo").begin_object();
    w.field("repeats", report.monte_carlo->repeats);
    w.field("mean", report.monte_carlo->mean);
    w.field("std_error", report.monte_carlo->std_error);
    w.end_object();
    write_map(w, "mean_ratios", report.mean_ratios);
  }
  w.end_object();
  return w.str();
}

std::string trace_to_jsonl(const AlgorithmTrace& trace) {
  std::string out;
  for (const auto& m : trace.merges) {
    JsonWriter w;
    w.begin_object()
        .field("type", "merge")
        .field("left", m.left)
        .field("right", m.right)
        .field("merged", m.merged)
        .field("left_size", m.left_size)
        .field("right_size", m.right_size)
        .field("linkage", m.linkage)
        .field("score", m.score)
        .end_object();
    out += w.str();
    out += '\n';
  }
  for (const auto& s : trace.splits) {
    JsonWriter w;
    w.begin_object()
        .field("type", "split")
        .field("begin", s.begin)
        .field("end", s.end)
        .field("cut", s.cut)
        .field("threshold", s.threshold)
        .end_object();
    out += w.str();
    out += '\n';
  }
  return out;
}

}  // namespace ehc::io
