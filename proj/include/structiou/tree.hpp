#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "structiou/interval.hpp"

namespace structiou {

/// A node of a relaxed segment tree. Terminals (no children) carry the word
/// they dominate; the word is payload and does not count as a node.
struct TreeNode {
  std::string label;
  OpenInterval interval{0.0, 1.0};
  std::vector<TreeNode> children;
  std::optional<std::string> word;

  bool is_terminal() const noexcept { return children.empty(); }
};

/// Owning handle for a tree; node_count includes the root and every labeled
/// descendant (preterminals included).
class ParseTree {
 public:
  explicit ParseTree(TreeNode root);

  const TreeNode& root() const noexcept { return root_; }
  std::size_t node_count() const noexcept { return node_count_; }
  /// Number of terminals, i.e. words.
  std::size_t word_count() const noexcept { return word_count_; }

 private:
  TreeNode root_;
  std::size_t node_count_;
  std::size_t word_count_;
};

/// Terminals in left-to-right order.
std::vector<const TreeNode*> terminals(const TreeNode& root);

/// Recompute every internal interval bottom-up as the hull of its children.
void recompute_hulls(TreeNode& node);

}  // namespace structiou
