#include "pafdp/errors.hpp"
#include "pafdp/tree_decomposition.hpp"

#include <algorithm>
#include <iterator>

namespace pafdp {

namespace {

class NiceBuilder {
 public:
  explicit NiceBuilder(const TreeDecomposition& td) : td_(td) {}

  NiceTreeDecomposition run() {
    const std::size_t top = build(td_.root, std::nullopt);
    out_.root = chain(top, {});
    return std::move(out_);
  }

 private:
  std::size_t add(NodeKind kind, ArgIndex arg, Bag bag, std::vector<std::size_t> children) {
    NiceNode node;
    node.id = static_cast<int>(out_.nodes.size());
    node.kind = kind;
    node.arg = arg;
    node.bag = std::move(bag);
    node.children = std::move(children);
    out_.nodes.push_back(std::move(node));
    return out_.nodes.size() - 1;
  }

  /// Forget everything outside `target`, then introduce what is missing.
  std::size_t chain(std::size_t from, const Bag& target) {
    std::size_t current = from;
    Bag bag = out_.nodes[from].bag;
    Bag drop, gain;
    std::set_difference(bag.begin(), bag.end(), target.begin(), target.end(),
                        std::back_inserter(drop));
    std::set_difference(target.begin(), target.end(), bag.begin(), bag.end(),
                        std::back_inserter(gain));
    for (auto a : drop) {
      bag.erase(std::find(bag.begin(), bag.end(), a));
      current = add(NodeKind::Forget, a, bag, {current});
    }
    for (auto a : gain) {
      bag.insert(std::upper_bound(bag.begin(), bag.end(), a), a);
      current = add(NodeKind::Introduce, a, bag, {current});
    }
    return current;
  }

  /// Nice subtree whose top node carries td node `t`'s bag. `base`, when
  /// given, is an empty-bag node used in place of the first fresh leaf; it
  /// lets children of empty-bag nodes stack into a path instead of joins.
  std::size_t build(std::size_t t, std::optional<std::size_t> base) {
    const auto& node = td_.nodes[t];
    if (node.children.empty()) {
      const std::size_t start = base ? *base : add(NodeKind::Leaf, 0, {}, {});
      return chain(start, node.bag);
    }
    if (node.bag.empty()) {
      std::optional<std::size_t> current = base;
      for (auto c : node.children) current = chain(build(c, current), {});
      return *current;
    }
    std::vector<std::size_t> branches;
    for (std::size_t i = 0; i < node.children.size(); ++i) {
      branches.push_back(chain(build(node.children[i], i == 0 ? base : std::nullopt), node.bag));
    }
    std::size_t joined = branches.back();
    for (std::size_t i = branches.size() - 1; i-- > 0;) {
      joined = add(NodeKind::Join, 0, node.bag, {branches[i], joined});
    }
    return joined;
  }

  const TreeDecomposition& td_;
  NiceTreeDecomposition out_;
};

}  // namespace

NiceTreeDecomposition make_nice(const TreeDecomposition& td, const AF& af) {
  if (auto violations = validate(td, af); !violations.empty()) {
    throw InputError("invalid tree decomposition: " + violations.front().describe());
  }
  return NiceBuilder(td).run();
}

std::vector<Violation> validate(const NiceTreeDecomposition& td, const AF& af) {
  auto out = validate(td.plain(), af);
  if (!out.empty() && (out.front().condition == "tree-structure" || out.front().condition == "bag")) {
    return out;
  }
  if (!td.nodes[td.root].bag.empty()) out.push_back({"nice-root", "root bag is not empty"});
  for (const auto& node : td.nodes) {
    const std::string where = "node " + std::to_string(node.id);
    auto child_bag = [&](std::size_t i) -> const Bag& { return td.nodes[node.children[i]].bag; };
    switch (node.kind) {
      case NodeKind::Leaf:
        if (!node.children.empty() || !node.bag.empty()) {
          out.push_back({"nice-leaf", where + " must be childless with an empty bag"});
        }
        break;
      case NodeKind::Introduce: {
        if (node.children.size() != 1) {
          out.push_back({"nice-introduce", where + " needs exactly one child"});
          break;
        }
        Bag expected = child_bag(0);
        const bool fresh = !std::binary_search(expected.begin(), expected.end(), node.arg);
        expected.insert(std::upper_bound(expected.begin(), expected.end(), node.arg), node.arg);
        if (!fresh || expected != node.bag) {
          out.push_back({"nice-introduce", where + " bag is not child bag plus " +
                                               (node.arg < af.num_arguments() ? af.name(node.arg) : "?")});
        }
        break;
      }
      case NodeKind::Forget: {
        if (node.children.size() != 1) {
          out.push_back({"nice-forget", where + " needs exactly one child"});
          break;
        }
        Bag expected = child_bag(0);
        auto it = std::lower_bound(expected.begin(), expected.end(), node.arg);
        const bool present = it != expected.end() && *it == node.arg;
        if (present) expected.erase(it);
        if (!present || expected != node.bag) {
          out.push_back({"nice-forget", where + " bag is not child bag minus " +
                                            (node.arg < af.num_arguments() ? af.name(node.arg) : "?")});
        }
        break;
      }
      case NodeKind::Join:
        if (node.children.size() != 2 || child_bag(0) != node.bag || child_bag(1) != node.bag) {
          out.push_back({"nice-join", where + " needs two children with identical bags"});
        }
        break;
    }
  }
  return out;
}

}  // namespace pafdp
