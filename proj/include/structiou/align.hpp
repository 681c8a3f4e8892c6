#pragma once

#include <compare>
#include <string_view>
#include <utility>
#include <vector>

#include "structiou/indexed_tree.hpp"
#include "structiou/tree.hpp"

namespace structiou {

enum class MatchMode { labeled, unlabeled };

/// Preorder indices of a matched node in the first and second tree.
struct NodePair {
  NodeId first;
  NodeId second;

  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

struct Alignment {
  std::vector<NodePair> pairs;  // sorted
  double objective = 0.0;       // sum of IoU over pairs
};

inline constexpr std::string_view kDummyLabel = "<DUMMY>";

/// True when the two matchings break ancestor/descendant consistency.
bool conflicted(const IndexedTree& t1, const IndexedTree& t2, NodePair a, NodePair b) noexcept;

/// IoU of the pair, or 0 when labeled mode forbids matching the labels.
double match_weight(const TreeNode& a, const TreeNode& b, MatchMode mode) noexcept;

/// Wrap each tree in a `<DUMMY>` root spanning the hull of both trees. The
/// dummies match each other with IoU 1. When the two spans differ the dummy
/// interval is wider than its child, so only the subtrees satisfy the hull rule.
std::pair<ParseTree, ParseTree> attach_dummy_roots(const ParseTree& t1, const ParseTree& t2);

/// Exact maximum IoU-weighted alignment under ancestry-preserving,
/// order-preserving matchings.
///
/// The solver evaluates f(p, q), the best alignment of the subtrees rooted at
/// p and q with p and q matched, bottom-up over all candidate pairs. For each
/// pair the inner maximization over same-length chains of disjoint
/// descendants runs as a prefix-max DP over the compressed right endpoints of
/// both subtrees, with touching intervals allowed to chain. The whole problem
/// is f(dummy, dummy) minus the dummy pair.
class AlignmentSolver {
 public:
  AlignmentSolver(const ParseTree& t1, const ParseTree& t2, MatchMode mode);
  // The index views point into the owned trees.
  AlignmentSolver(const AlignmentSolver&) = delete;
  AlignmentSolver& operator=(const AlignmentSolver&) = delete;

  /// Root-aligned objective for the subtrees at preorder ids p (first tree)
  /// and q (second tree). In labeled mode a label mismatch contributes 0 for
  /// the forced root pair.
  double subtree_objective(NodeId p, NodeId q) const;

  /// Optimum without reconstructing the pair set.
  double objective() const { return inner(0, 0); }

  Alignment solve() const;

 private:
  struct Ordering {
    std::vector<NodeId> desc;        // strict descendants sorted by (end, id)
    std::vector<std::size_t> end_rank;    // 1-based rank of desc[k]'s end
    std::vector<std::size_t> start_rank;  // number of distinct ends <= desc[k]'s start
    std::size_t distinct = 0;
  };

  struct Cell {
    double value = 0.0;
    NodeId a = kNone;
    NodeId b = kNone;
  };

  static constexpr NodeId kNone = static_cast<NodeId>(-1);

  AlignmentSolver(std::pair<ParseTree, ParseTree> dummies, MatchMode mode);

  static Ordering make_ordering(const IndexedTree& tree, NodeId node);
  double weight(NodeId a, NodeId b) const { return weight_[a * cols_ + b]; }
  double inner(NodeId p, NodeId q) const;
  std::vector<Cell> inner_grid(NodeId p, NodeId q) const;

  // Dummy-rooted copies; input id i is id i + 1 here.
  ParseTree dummy1_;
  ParseTree dummy2_;
  IndexedTree index1_;
  IndexedTree index2_;
  std::size_t cols_;
  std::vector<double> weight_;
  std::vector<double> f_;
  std::vector<Ordering> order1_;
  std::vector<Ordering> order2_;
};

Alignment max_weight_alignment(const ParseTree& t1, const ParseTree& t2, MatchMode mode);

/// Root-aligned objective of two whole trees.
double subtree_objective(const ParseTree& t1, const ParseTree& t2, MatchMode mode);

}  // namespace structiou
