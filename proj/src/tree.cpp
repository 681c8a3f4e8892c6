#include "structiou/tree.hpp"

#include <algorithm>
#include <utility>

namespace structiou {

namespace {

void count(const TreeNode& node, std::size_t& nodes, std::size_t& words) {
  ++nodes;
  if (node.is_terminal()) ++words;
  for (const auto& child : node.children) count(child, nodes, words);
}

void collect_terminals(const TreeNode& node, std::vector<const TreeNode*>& out) {
  if (node.is_terminal()) {
    out.push_back(&node);
    return;
  }
  for (const auto& child : node.children) collect_terminals(child, out);
}

}  // namespace

ParseTree::ParseTree(TreeNode root)
    : root_(std::move(root)), node_count_(0), word_count_(0) {
  count(root_, node_count_, word_count_);
}

std::vector<const TreeNode*> terminals(const TreeNode& root) {
  std::vector<const TreeNode*> out;
  collect_terminals(root, out);
  return out;
}

void recompute_hulls(TreeNode& node) {
  if (node.is_terminal()) return;
  double lo = 0.0;
  double hi = 0.0;
  bool first = true;
  for (auto& child : node.children) {
    recompute_hulls(child);
    if (first || child.interval.start() < lo) lo = child.interval.start();
    if (first || child.interval.end() > hi) hi = child.interval.end();
    first = false;
  }
  node.interval = OpenInterval(lo, hi);
}

}  // namespace structiou
