#include "pafdp/td_format.hpp"

#include "pafdp/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace pafdp {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

[[noreturn]] void fail(std::size_t line, const std::string& message) {
  throw InputError("td line " + std::to_string(line) + ": " + message);
}

int parse_id(std::string_view word, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    fail(line, "bad node id '" + std::string(word) + "'");
  }
  return value;
}

struct RawNode {
  Bag bag;
  std::vector<int> children;
  bool has_parent = false;
  std::optional<std::pair<NodeKind, ArgIndex>> type;
};

std::string bag_line(int id, const Bag& bag, const AF& af) {
  std::string out = "bag " + std::to_string(id);
  for (auto a : bag) out += " " + af.name(a);
  return out + "\n";
}

template <class Node>
void write_edges(std::ostringstream& os, const std::vector<Node>& nodes) {
  for (const auto& n : nodes) {
    for (auto c : n.children) os << "edge " << n.id << ' ' << nodes[c].id << '\n';
  }
}

}  // namespace

AnyDecomposition parse_td(std::string_view text, const AF& af) {
  std::map<int, RawNode> raw;
  std::vector<std::pair<int, int>> edges;
  std::size_t line_no = 0;
  std::size_t typed = 0;
  std::set<int> declared;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    const auto words = split_words(line);
    if (words.empty() || words.front().front() == '#') continue;

    if (words[0] == "bag") {
      if (words.size() < 2) fail(line_no, "bag needs an id");
      const int id = parse_id(words[1], line_no);
      if (!declared.insert(id).second) fail(line_no, "duplicate bag id");
      auto& node = raw[id];
      for (std::size_t i = 2; i < words.size(); ++i) {
        auto a = af.find(words[i]);
        if (!a) fail(line_no, "unknown argument '" + std::string(words[i]) + "'");
        node.bag.push_back(*a);
      }
      std::sort(node.bag.begin(), node.bag.end());
      if (std::adjacent_find(node.bag.begin(), node.bag.end()) != node.bag.end()) {
        fail(line_no, "argument repeated in bag");
      }
    } else if (words[0] == "edge") {
      if (words.size() != 3) fail(line_no, "edge needs <parent> <child>");
      edges.emplace_back(parse_id(words[1], line_no), parse_id(words[2], line_no));
    } else if (words[0] == "type") {
      if (words.size() != 3) fail(line_no, "type needs <id> <kind>");
      const int id = parse_id(words[1], line_no);
      const std::string_view kind = words[2];
      std::pair<NodeKind, ArgIndex> type{NodeKind::Leaf, 0};
      auto arg_of = [&](std::string_view name) {
        auto a = af.find(name);
        if (!a) fail(line_no, "unknown argument '" + std::string(name) + "'");
        return *a;
      };
      if (kind == "leaf") {
        type = {NodeKind::Leaf, 0};
      } else if (kind == "join") {
        type = {NodeKind::Join, 0};
      } else if (kind.starts_with("intro:")) {
        type = {NodeKind::Introduce, arg_of(kind.substr(6))};
      } else if (kind.starts_with("forget:")) {
        type = {NodeKind::Forget, arg_of(kind.substr(7))};
      } else {
        fail(line_no, "unknown node type '" + std::string(kind) + "'");
      }
      if (raw[id].type) fail(line_no, "node typed twice");
      raw[id].type = type;
      ++typed;
    } else {
      fail(line_no, "unknown directive '" + std::string(words[0]) + "'");
    }
  }

  for (const auto& [parent, child] : edges) {
    if (!declared.contains(parent) || !declared.contains(child)) {
      throw InputError("td edge " + std::to_string(parent) + "->" + std::to_string(child) +
                       " references an undeclared node");
    }
    if (raw[child].has_parent) {
      throw InputError("td node " + std::to_string(child) + " has two parents");
    }
    raw[child].has_parent = true;
    raw[parent].children.push_back(child);
  }
  if (declared.empty()) throw InputError("td file declares no nodes");
  for (const auto& [id, node] : raw) {
    if (!declared.contains(id)) throw InputError("td type for undeclared node " + std::to_string(id));
  }

  std::map<int, std::size_t> position;
  for (const auto& [id, node] : raw) position.emplace(id, position.size());
  std::optional<std::size_t> root;
  for (const auto& [id, node] : raw) {
    if (node.has_parent) continue;
    if (root) throw InputError("td has more than one root");
    root = position[id];
  }
  if (!root) throw InputError("td has no root");

  if (typed == 0) {
    TreeDecomposition td;
    td.root = *root;
    for (const auto& [id, node] : raw) {
      TdNode n{id, node.bag, {}};
      for (int c : node.children) n.children.push_back(position[c]);
      td.nodes.push_back(std::move(n));
    }
    return td;
  }
  NiceTreeDecomposition td;
  td.root = *root;
  for (const auto& [id, node] : raw) {
    if (!node.type) throw InputError("td node " + std::to_string(id) + " has no type");
    NiceNode n;
    n.id = id;
    n.kind = node.type->first;
    n.arg = node.type->second;
    n.bag = node.bag;
    for (int c : node.children) n.children.push_back(position[c]);
    td.nodes.push_back(std::move(n));
  }
  return td;
}

std::string serialize_td(const TreeDecomposition& td, const AF& af) {
  std::ostringstream os;
  for (const auto& n : td.nodes) os << bag_line(n.id, n.bag, af);
  write_edges(os, td.nodes);
  return os.str();
}

std::string serialize_td(const NiceTreeDecomposition& td, const AF& af) {
  std::ostringstream os;
  for (const auto& n : td.nodes) os << bag_line(n.id, n.bag, af);
  write_edges(os, td.nodes);
  for (const auto& n : td.nodes) {
    os << "type " << n.id << ' ';
    switch (n.kind) {
      case NodeKind::Leaf: os << "leaf"; break;
      case NodeKind::Introduce: os << "intro:" << af.name(n.arg); break;
      case NodeKind::Forget: os << "forget:" << af.name(n.arg); break;
      case NodeKind::Join: os << "join"; break;
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace pafdp
