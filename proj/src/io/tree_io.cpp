#include <cctype>
#include <charconv>
#include <vector>

#include <json.hpp>

#include "ehc/io.hpp"

namespace ehc::io {

namespace {

// Depth-first walk without recursion; trees from 1D cuts can be as deep as
// they are wide. `open(node)` runs before the children, `between` after the
// left one, `close` after the right one.
template <class Open, class Between, class Close, class Leaf>
void walk(const Dendrogram& tree, Open open, Between between, Close close, Leaf leaf) {
  struct Frame {
    Dendrogram::NodeId id;
    int stage;
  };
  std::vector<Frame> stack{{tree.root(), 0}};
  while (!stack.empty()) {
    auto& f = stack.back();
    const auto& node = tree.node(f.id);
    if (node.is_leaf()) {
      leaf(node.leaf);
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      open();
      f.stage = 1;
      stack.push_back({node.left, 0});
    } else if (f.stage == 1) {
      between();
      f.stage = 2;
      stack.push_back({node.right, 0});
    } else {
      close();
      stack.pop_back();
    }
  }
}

}  // namespace

std::string tree_to_json(const Dendrogram& tree) {
  std::string out;
  walk(
      tree, [&] { out += "{\"left\":"; }, [&] { out += ",\"right\":"; }, [&] { out += '}'; },
      [&](std::uint32_t leaf) {
        out += "{\"leaf\":";
        out += std::to_string(leaf);
        out += '}';
      });
  return out;
}

std::string tree_to_newick(const Dendrogram& tree) {
  std::string out;
  walk(
      tree, [&] { out += '('; }, [&] { out += ','; }, [&] { out += ')'; },
      [&](std::uint32_t leaf) { out += std::to_string(leaf); });
  out += ';';
  return out;
}

Dendrogram parse_tree_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("tree JSON: ") + e.what());
  }
  Dendrogram::Builder builder;
  struct Frame {
    const nlohmann::json* node;
    int stage;
    Dendrogram::NodeId left;
  };
  std::vector<Frame> stack{{&root, 0, 0}};
  Dendrogram::NodeId last = 0;
  while (!stack.empty()) {
    auto& f = stack.back();
    const auto& j = *f.node;
    if (!j.is_object()) throw ParseError("tree JSON: every node must be an object");
    if (f.stage == 0 && j.contains("leaf")) {
      const auto& leaf = j.at("leaf");
      if (!leaf.is_number_unsigned() || j.size() != 1) {
        throw ParseError("tree JSON: a leaf must be {\"leaf\": <non-negative integer>}");
      }
      last = builder.add_leaf(leaf.get<std::size_t>());
      stack.pop_back();
      continue;
    }
    if (f.stage == 0) {
      if (!j.contains("left") || !j.contains("right") || j.size() != 2) {
        throw ParseError("tree JSON: an internal node must have exactly \"left\" and \"right\"");
      }
      f.stage = 1;
      stack.push_back({&j.at("left"), 0, 0});
    } else if (f.stage == 1) {
      f.left = last;
      f.stage = 2;
      stack.push_back({&j.at("right"), 0, 0});
    } else {
      last = builder.join(f.left, last);
      stack.pop_back();
    }
  }
  try {
    return std::move(builder).finish();
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("tree JSON: ") + e.what());
  }
}

Dendrogram parse_newick(std::string_view text) {
  Dendrogram::Builder builder;
  std::vector<std::vector<Dendrogram::NodeId>> open;
  bool have_root = false;
  bool done = false;
  auto fail = [&](std::size_t pos, const std::string& what) {
    throw ParseError("Newick: " + what + " at offset " + std::to_string(pos));
  };
  auto attach = [&](std::size_t pos, Dendrogram::NodeId id) {
    if (open.empty()) {
      if (have_root) fail(pos, "more than one top-level tree");
      have_root = true;
    } else {
      if (open.back().size() == 2) fail(pos, "node with more than two children");
      open.back().push_back(id);
    }
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (done) fail(i, "text after ';'");
    if (c == '(') {
      if (open.empty() && have_root) fail(i, "more than one top-level tree");
      open.emplace_back();
      ++i;
    } else if (c == ',') {
      if (open.empty() || open.back().size() != 1) fail(i, "unexpected ','");
      ++i;
    } else if (c == ')') {
      if (open.empty() || open.back().size() != 2) fail(i, "internal node needs two children");
      const auto kids = open.back();
      open.pop_back();
      attach(i, builder.join(kids[0], kids[1]));
      ++i;
    } else if (c == ';') {
      if (!open.empty() || !have_root) fail(i, "unexpected ';'");
      done = true;
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t label = 0;
      const auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), label);
      if (ec != std::errc()) fail(i, "bad leaf label");
      const auto end = static_cast<std::size_t>(ptr - text.data());
      attach(i, builder.add_leaf(label));
      i = end;
    } else {
      fail(i, std::string("unexpected character '") + c + "'");
    }
  }
  if (!done) throw ParseError("Newick: missing ';'");
  try {
    return std::move(builder).finish();
  } catch (const std::exception& e) {
    throw ParseError(std::string("Newick: ") + e.what());
  }
}

Dendrogram parse_tree(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_tree_json(text) : parse_newick(text);
  }
  throw ParseError("tree: empty input");
}

}  // namespace ehc::io
