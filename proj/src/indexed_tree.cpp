#include "structiou/indexed_tree.hpp"

namespace structiou {

IndexedTree::IndexedTree(const TreeNode& root) { visit(root, kNoParent); }

void IndexedTree::visit(const TreeNode& node, NodeId parent) {
  const NodeId id = nodes_.size();
  nodes_.push_back(&node);
  parent_.push_back(parent);
  end_.push_back(0);
  children_.emplace_back();
  if (parent != kNoParent) children_[parent].push_back(id);
  for (const auto& child : node.children) visit(child, id);
  end_[id] = nodes_.size();
}

}  // namespace structiou
