#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structiou/interval.hpp"
#include "structiou/tree.hpp"

namespace structiou {

using NodeId = std::size_t;

/// Flat preorder view of a tree. Node 0 is the root; the subtree of node i
/// occupies the preorder range [i, subtree_end(i)).
class IndexedTree {
 public:
  explicit IndexedTree(const TreeNode& root);
  explicit IndexedTree(const ParseTree& tree) : IndexedTree(tree.root()) {}
  // The view points into the tree, which must outlive it.
  explicit IndexedTree(ParseTree&&) = delete;
  explicit IndexedTree(TreeNode&&) = delete;

  std::size_t size() const noexcept { return nodes_.size(); }
  const TreeNode& node(NodeId id) const { return *nodes_[id]; }
  const std::string& label(NodeId id) const { return nodes_[id]->label; }
  const OpenInterval& interval(NodeId id) const { return nodes_[id]->interval; }
  NodeId parent(NodeId id) const { return parent_[id]; }
  NodeId subtree_end(NodeId id) const { return end_[id]; }
  const std::vector<NodeId>& children(NodeId id) const { return children_[id]; }

  /// Strict ancestry: a node is not its own ancestor.
  bool is_ancestor(NodeId a, NodeId b) const noexcept { return a < b && b < end_[a]; }
  bool related(NodeId a, NodeId b) const noexcept {
    return a == b || is_ancestor(a, b) || is_ancestor(b, a);
  }

  static constexpr NodeId kNoParent = static_cast<NodeId>(-1);

 private:
  void visit(const TreeNode& node, NodeId parent);

  std::vector<const TreeNode*> nodes_;
  std::vector<NodeId> parent_;
  std::vector<NodeId> end_;
  std::vector<std::vector<NodeId>> children_;
};

}  // namespace structiou
