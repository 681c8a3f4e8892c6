#include "structiou/align.hpp"

#include <algorithm>
#include <utility>

namespace structiou {

bool conflicted(const IndexedTree& t1, const IndexedTree& t2, NodePair a, NodePair b) noexcept {
  const bool anc1 = t1.is_ancestor(a.first, b.first);
  const bool anc2 = t2.is_ancestor(a.second, b.second);
  const bool desc1 = t1.is_ancestor(b.first, a.first);
  const bool desc2 = t2.is_ancestor(b.second, a.second);
  return anc1 != anc2 || desc1 != desc2;
}

double match_weight(const TreeNode& a, const TreeNode& b, MatchMode mode) noexcept {
  if (mode == MatchMode::labeled && a.label != b.label) return 0.0;
  return iou(a.interval, b.interval);
}

std::pair<ParseTree, ParseTree> attach_dummy_roots(const ParseTree& t1, const ParseTree& t2) {
  const auto& i1 = t1.root().interval;
  const auto& i2 = t2.root().interval;
  const OpenInterval hull(std::min(i1.start(), i2.start()), std::max(i1.end(), i2.end()));
  auto wrap = [&](const ParseTree& tree) {
    TreeNode dummy;
    dummy.label = std::string(kDummyLabel);
    dummy.interval = hull;
    dummy.children.push_back(tree.root());
    return ParseTree(std::move(dummy));
  };
  return {wrap(t1), wrap(t2)};
}

AlignmentSolver::Ordering AlignmentSolver::make_ordering(const IndexedTree& tree, NodeId node) {
  Ordering ord;
  for (NodeId d = node + 1; d < tree.subtree_end(node); ++d) ord.desc.push_back(d);
  std::stable_sort(ord.desc.begin(), ord.desc.end(), [&](NodeId x, NodeId y) {
    return tree.interval(x).end() < tree.interval(y).end();
  });
  std::vector<double> ends;
  ends.reserve(ord.desc.size());
  for (NodeId d : ord.desc) {
    if (ends.empty() || ends.back() != tree.interval(d).end()) ends.push_back(tree.interval(d).end());
  }
  ord.distinct = ends.size();
  for (NodeId d : ord.desc) {
    const auto& iv = tree.interval(d);
    ord.end_rank.push_back(
        static_cast<std::size_t>(std::lower_bound(ends.begin(), ends.end(), iv.end()) - ends.begin()) + 1);
    ord.start_rank.push_back(
        static_cast<std::size_t>(std::upper_bound(ends.begin(), ends.end(), iv.start()) - ends.begin()));
  }
  return ord;
}

AlignmentSolver::AlignmentSolver(const ParseTree& t1, const ParseTree& t2, MatchMode mode)
    : AlignmentSolver(attach_dummy_roots(t1, t2), mode) {}

AlignmentSolver::AlignmentSolver(std::pair<ParseTree, ParseTree> dummies, MatchMode mode)
    : dummy1_(std::move(dummies.first)),
      dummy2_(std::move(dummies.second)),
      index1_(dummy1_),
      index2_(dummy2_),
      cols_(index2_.size()) {
  const std::size_t n = index1_.size();
  const std::size_t m = index2_.size();
  weight_.assign(n * m, 0.0);
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < m; ++b) weight_[a * m + b] = match_weight(index1_.node(a), index2_.node(b), mode);
  }
  // Dummies pair only with each other.
  for (NodeId b = 1; b < m; ++b) weight_[b] = 0.0;
  for (NodeId a = 1; a < n; ++a) weight_[a * m] = 0.0;
  weight_[0] = 1.0;

  order1_.reserve(n);
  order2_.reserve(m);
  for (NodeId a = 0; a < n; ++a) order1_.push_back(make_ordering(index1_, a));
  for (NodeId b = 0; b < m; ++b) order2_.push_back(make_ordering(index2_, b));

  // Descendants have larger preorder ids, so reverse preorder on both sides
  // visits every candidate pair after all candidate pairs below it.
  f_.assign(n * m, 0.0);
  for (NodeId a = n; a-- > 0;) {
    for (NodeId b = m; b-- > 0;) {
      const double w = weight(a, b);
      if (w > 0.0) f_[a * m + b] = w + inner(a, b);
    }
  }
}

double AlignmentSolver::inner(NodeId p, NodeId q) const {
  const Ordering& o1 = order1_[p];
  const Ordering& o2 = order2_[q];
  if (o1.desc.empty() || o2.desc.empty()) return 0.0;
  const std::size_t width = o2.distinct + 1;
  std::vector<double> pm((o1.distinct + 1) * width, 0.0);
  std::vector<double> row(width, 0.0);

  std::size_t k = 0;
  while (k < o1.desc.size()) {
    const std::size_t rank = o1.end_rank[k];
    std::fill(row.begin(), row.end(), 0.0);
    for (; k < o1.desc.size() && o1.end_rank[k] == rank; ++k) {
      const NodeId a = o1.desc[k];
      const double* f_row = &f_[a * cols_];
      const double* prefix = &pm[o1.start_rank[k] * width];
      for (std::size_t l = 0; l < o2.desc.size(); ++l) {
        const NodeId b = o2.desc[l];
        if (weight(a, b) <= 0.0) continue;
        const double v = f_row[b] + prefix[o2.start_rank[l]];
        double& slot = row[o2.end_rank[l]];
        if (v > slot) slot = v;
      }
    }
    double run = 0.0;
    const double* above = &pm[(rank - 1) * width];
    double* here = &pm[rank * width];
    for (std::size_t c = 1; c < width; ++c) {
      run = std::max(run, row[c]);
      here[c] = std::max(above[c], run);
    }
  }
  return pm.back();
}

namespace {

// Larger value wins; equal values prefer the lexicographically smaller pair.
template <typename Cell>
bool better(const Cell& x, const Cell& y) {
  if (x.value != y.value) return x.value > y.value;
  return std::pair(x.a, x.b) < std::pair(y.a, y.b);
}

}  // namespace

std::vector<AlignmentSolver::Cell> AlignmentSolver::inner_grid(NodeId p, NodeId q) const {
  const Ordering& o1 = order1_[p];
  const Ordering& o2 = order2_[q];
  const std::size_t width = o2.distinct + 1;
  std::vector<Cell> pm((o1.distinct + 1) * width);
  std::vector<Cell> row(width);

  std::size_t k = 0;
  while (k < o1.desc.size()) {
    const std::size_t rank = o1.end_rank[k];
    std::fill(row.begin(), row.end(), Cell{});
    for (; k < o1.desc.size() && o1.end_rank[k] == rank; ++k) {
      const NodeId a = o1.desc[k];
      for (std::size_t l = 0; l < o2.desc.size(); ++l) {
        const NodeId b = o2.desc[l];
        if (weight(a, b) <= 0.0) continue;
        const Cell candidate{f_[a * cols_ + b] + pm[o1.start_rank[k] * width + o2.start_rank[l]].value, a, b};
        Cell& slot = row[o2.end_rank[l]];
        if (slot.a == kNone || better(candidate, slot)) slot = candidate;
      }
    }
    Cell run;
    for (std::size_t c = 1; c < width; ++c) {
      if (row[c].a != kNone && (run.a == kNone || better(row[c], run))) run = row[c];
      const Cell& above = pm[(rank - 1) * width + c];
      Cell& here = pm[rank * width + c];
      if (above.a != kNone && (run.a == kNone || better(above, run))) {
        here = above;
      } else {
        here = run;
      }
    }
  }
  return pm;
}

double AlignmentSolver::subtree_objective(NodeId p, NodeId q) const {
  const NodeId a = p + 1;
  const NodeId b = q + 1;
  const double w = weight(a, b);
  return w > 0.0 ? f_[a * cols_ + b] : inner(a, b);
}

Alignment AlignmentSolver::solve() const {
  Alignment result;
  result.objective = inner(0, 0);

  std::vector<NodePair> stack{{0, 0}};
  while (!stack.empty()) {
    const auto [p, q] = stack.back();
    stack.pop_back();
    const Ordering& o1 = order1_[p];
    const Ordering& o2 = order2_[q];
    if (o1.desc.empty() || o2.desc.empty()) continue;
    const std::size_t width = o2.distinct + 1;
    const auto grid = inner_grid(p, q);
    // Walk the chain right to left: the cell's best item is the last element,
    // and the remainder of the chain lives at its start coordinates.
    std::size_t r = o1.distinct;
    std::size_t c = o2.distinct;
    while (r > 0 && c > 0) {
      const Cell& cell = grid[r * width + c];
      if (cell.a == kNone) break;
      result.pairs.push_back({cell.a - 1, cell.b - 1});
      stack.push_back({cell.a, cell.b});
      const auto pos1 = std::find(o1.desc.begin(), o1.desc.end(), cell.a) - o1.desc.begin();
      const auto pos2 = std::find(o2.desc.begin(), o2.desc.end(), cell.b) - o2.desc.begin();
      r = o1.start_rank[static_cast<std::size_t>(pos1)];
      c = o2.start_rank[static_cast<std::size_t>(pos2)];
    }
  }
  std::sort(result.pairs.begin(), result.pairs.end());
  return result;
}

Alignment max_weight_alignment(const ParseTree& t1, const ParseTree& t2, MatchMode mode) {
  return AlignmentSolver(t1, t2, mode).solve();
}

double subtree_objective(const ParseTree& t1, const ParseTree& t2, MatchMode mode) {
  return AlignmentSolver(t1, t2, mode).subtree_objective(0, 0);
}

}  // namespace structiou
