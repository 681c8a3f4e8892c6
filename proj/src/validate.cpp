#include "structiou/validate.hpp"

#include <algorithm>

#include "structiou/indexed_tree.hpp"

namespace structiou {

namespace {

void check_node(const TreeNode& node, const std::string& path, std::vector<Violation>& out) {
  if (node.is_terminal()) {
    if (!node.word) out.push_back({"terminal without word", path});
    return;
  }
  if (node.word) out.push_back({"internal node with word", path});
  double lo = node.children.front().interval.start();
  double hi = node.children.front().interval.end();
  for (std::size_t k = 1; k < node.children.size(); ++k) {
    const auto& prev = node.children[k - 1].interval;
    const auto& cur = node.children[k].interval;
    if (!(prev.start() < cur.start())) out.push_back({"children out of order", path});
    if (!disjoint(prev, cur)) out.push_back({"children overlap", path});
    lo = std::min(lo, cur.start());
    hi = std::max(hi, cur.end());
  }
  if (node.interval.start() != lo || node.interval.end() != hi) {
    out.push_back({"hull mismatch", path});
  }
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    check_node(node.children[k], path + "." + std::to_string(k), out);
  }
}

}  // namespace

std::vector<Violation> validate(const ParseTree& tree) {
  std::vector<Violation> out;
  check_node(tree.root(), "0", out);
  if (!out.empty()) return out;

  // Every pair of unrelated nodes must be disjoint.
  const IndexedTree index(tree);
  for (NodeId a = 0; a < index.size(); ++a) {
    for (NodeId b = a + 1; b < index.size(); ++b) {
      if (!index.related(a, b) && !disjoint(index.interval(a), index.interval(b))) {
        out.push_back({"unrelated nodes overlap", std::to_string(a) + "," + std::to_string(b)});
      }
    }
  }
  return out;
}

}  // namespace structiou
