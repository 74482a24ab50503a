#include "pafdp/tree_decomposition.hpp"

#include "pafdp/errors.hpp"
#include "pafdp/random.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace pafdp {

namespace {

std::size_t max_bag(const auto& nodes) {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.bag.size());
  return best;
}

std::string attack_name(const AF& af, const Attack& att) {
  return "(" + af.name(att.source) + "," + af.name(att.target) + ")";
}

}  // namespace

std::size_t width(const TreeDecomposition& td) {
  const auto m = max_bag(td.nodes);
  return m == 0 ? 0 : m - 1;
}

std::size_t width(const NiceTreeDecomposition& td) {
  const auto m = max_bag(td.nodes);
  return m == 0 ? 0 : m - 1;
}

std::vector<std::size_t> NiceTreeDecomposition::post_order() const {
  std::vector<std::size_t> order;
  if (nodes.empty()) return order;
  order.reserve(nodes.size());
  std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
  while (!stack.empty()) {
    auto& [node, next_child] = stack.back();
    if (next_child < nodes[node].children.size()) {
      const std::size_t child = nodes[node].children[next_child++];
      stack.emplace_back(child, 0);
    } else {
      order.push_back(node);
      stack.pop_back();
    }
  }
  return order;
}

TreeDecomposition NiceTreeDecomposition::plain() const {
  TreeDecomposition td;
  td.root = root;
  td.nodes.reserve(nodes.size());
  for (const auto& n : nodes) td.nodes.push_back({n.id, n.bag, n.children});
  return td;
}

std::vector<Violation> validate(const TreeDecomposition& td, const AF& af) {
  std::vector<Violation> out;
  const std::size_t count = td.nodes.size();
  if (count == 0) return {{"tree-structure", "no nodes"}};
  if (td.root >= count) return {{"tree-structure", "root out of range"}};

  std::vector<std::size_t> parent(count, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t c : td.nodes[i].children) {
      if (c >= count || c == td.root ||
          parent[c] != std::numeric_limits<std::size_t>::max()) {
        out.push_back({"tree-structure", "node " + std::to_string(td.nodes[i].id) +
                                             " has an invalid or shared child"});
        return out;
      }
      parent[c] = i;
    }
  }
  // Reachability from the root (rules out cycles detached from it).
  std::vector<bool> seen(count, false);
  std::vector<std::size_t> stack{td.root};
  seen[td.root] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto n = stack.back();
    stack.pop_back();
    for (auto c : td.nodes[n].children) {
      if (!seen[c]) {
        seen[c] = true;
        ++reached;
        stack.push_back(c);
      }
    }
  }
  if (reached != count) {
    out.push_back({"tree-structure", "nodes not reachable from the root"});
    return out;
  }

  for (const auto& node : td.nodes) {
    const bool sorted = std::adjacent_find(node.bag.begin(), node.bag.end(),
                                           std::greater_equal<>()) == node.bag.end();
    const bool in_range = std::all_of(node.bag.begin(), node.bag.end(),
                                      [&](ArgIndex a) { return a < af.num_arguments(); });
    if (!sorted || !in_range) {
      out.push_back({"bag", "node " + std::to_string(node.id) + " has a malformed bag"});
      return out;
    }
  }

  std::vector<ArgSet> bags;
  bags.reserve(count);
  for (const auto& node : td.nodes) {
    ArgSet s = af.empty_set();
    for (auto a : node.bag) s.set(a);
    bags.push_back(std::move(s));
  }

  for (ArgIndex a = 0; a < af.num_arguments(); ++a) {
    std::size_t tops = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (!bags[i].test(a)) continue;
      if (i == td.root || !bags[parent[i]].test(a)) ++tops;
    }
    if (tops == 0) out.push_back({"vertex-coverage", af.name(a)});
    if (tops > 1) out.push_back({"connectedness", af.name(a)});
  }
  for (const auto& att : af.attacks()) {
    const bool covered = std::any_of(bags.begin(), bags.end(), [&](const ArgSet& s) {
      return s.test(att.source) && s.test(att.target);
    });
    if (!covered) out.push_back({"edge-coverage", attack_name(af, att)});
  }
  return out;
}

std::vector<ArgIndex> elimination_order(const AF& af, const Heuristic& heuristic) {
  const std::size_t n = af.num_arguments();
  if (heuristic.kind == Heuristic::Kind::GivenOrder) {
    std::vector<ArgIndex> sorted = heuristic.order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == n;
    for (std::size_t i = 0; permutation && i < n; ++i) permutation = sorted[i] == i;
    if (!permutation) throw InputError("elimination order is not a permutation of the arguments");
    return heuristic.order;
  }

  std::vector<std::set<ArgIndex>> adj(n);
  for (const auto& att : af.attacks()) {
    if (att.source == att.target) continue;
    adj[att.source].insert(att.target);
    adj[att.target].insert(att.source);
  }
  std::optional<Rng> rng;
  if (heuristic.seed) rng = substream(*heuristic.seed, 0x7464);

  auto fill_in = [&](ArgIndex v) {
    std::size_t missing = 0;
    for (auto i = adj[v].begin(); i != adj[v].end(); ++i) {
      for (auto j = std::next(i); j != adj[v].end(); ++j) missing += !adj[*i].contains(*j);
    }
    return missing;
  };

  std::vector<bool> eliminated(n, false);
  std::vector<ArgIndex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best_score = std::numeric_limits<std::size_t>::max();
    std::vector<ArgIndex> ties;
    for (ArgIndex v = 0; v < n; ++v) {
      if (eliminated[v]) continue;
      const std::size_t score =
          heuristic.kind == Heuristic::Kind::MinFill ? fill_in(v) : adj[v].size();
      if (score < best_score) {
        best_score = score;
        ties.assign(1, v);
      } else if (score == best_score) {
        ties.push_back(v);
      }
    }
    const ArgIndex v = rng ? ties[uniform_below(*rng, ties.size())] : ties.front();
    for (auto i = adj[v].begin(); i != adj[v].end(); ++i) {
      for (auto j = std::next(i); j != adj[v].end(); ++j) {
        adj[*i].insert(*j);
        adj[*j].insert(*i);
      }
    }
    for (auto u : adj[v]) adj[u].erase(v);
    adj[v].clear();
    eliminated[v] = true;
    order.push_back(v);
  }
  return order;
}

TreeDecomposition decompose(const AF& af, const Heuristic& heuristic) {
  const std::size_t n = af.num_arguments();
  const auto order = elimination_order(af, heuristic);
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;

  std::vector<std::set<ArgIndex>> adj(n);
  for (const auto& att : af.attacks()) {
    if (att.source == att.target) continue;
    adj[att.source].insert(att.target);
    adj[att.target].insert(att.source);
  }

  // One node per eliminated vertex: {v} plus its later neighbours; the parent
  // is the node of the earliest-eliminated later neighbour.
  TreeDecomposition td;
  td.nodes.resize(n);
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < n; ++i) {
    const ArgIndex v = order[i];
    std::vector<ArgIndex> later;
    for (auto u : adj[v]) {
      if (position[u] > i) later.push_back(u);
    }
    for (std::size_t x = 0; x < later.size(); ++x) {
      for (std::size_t y = x + 1; y < later.size(); ++y) {
        adj[later[x]].insert(later[y]);
        adj[later[y]].insert(later[x]);
      }
    }
    Bag bag = later;
    bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    td.nodes[i].id = static_cast<int>(i);
    td.nodes[i].bag = std::move(bag);
    if (later.empty()) {
      roots.push_back(i);
    } else {
      const ArgIndex p = *std::min_element(later.begin(), later.end(), [&](ArgIndex a, ArgIndex b) {
        return position[a] < position[b];
      });
      td.nodes[position[p]].children.push_back(i);
    }
  }
  if (roots.size() == 1) {
    td.root = roots.front();
  } else {
    td.nodes.push_back({static_cast<int>(n), {}, roots});
    td.root = n;
  }
  return td;
}

TreeDecomposition project(const TreeDecomposition& td, const AF& from, const AF& to) {
  TreeDecomposition out = td;
  for (auto& node : out.nodes) {
    Bag bag;
    for (auto a : node.bag) {
      if (auto b = to.find(from.name(a))) bag.push_back(*b);
    }
    std::sort(bag.begin(), bag.end());
    node.bag = std::move(bag);
  }
  return out;
}

}  // namespace pafdp
