#include "structiou/perturb.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "structiou/error.hpp"
#include "structiou/projection.hpp"

namespace structiou {

namespace {

void check_delta(double delta) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw UsageError("delta must be in [0, 1]");
}

void check_inputs(const ParseTree& tree, const BoundaryTable& table) {
  check_boundaries(table);
  if (!table.gap_free()) throw DataError("perturbation needs a gap-free boundary table");
  if (tree.word_count() != table.rows.size()) {
    throw DataError("tree has " + std::to_string(tree.word_count()) + " words but boundary table has " +
                    std::to_string(table.rows.size()) + " rows");
  }
}

using Path = std::vector<std::size_t>;

bool find_terminal(const TreeNode& node, std::size_t& remaining, Path& path) {
  if (node.is_terminal()) {
    if (remaining == 0) return true;
    --remaining;
    return false;
  }
  for (std::size_t k = 0; k < node.children.size(); ++k) {
    path.push_back(k);
    if (find_terminal(node.children[k], remaining, path)) return true;
    path.pop_back();
  }
  return false;
}

Path terminal_path(const TreeNode& root, std::size_t index) {
  Path path;
  std::size_t remaining = index;
  find_terminal(root, remaining, path);
  return path;
}

TreeNode& at(TreeNode& root, const Path& path, std::size_t depth) {
  TreeNode* node = &root;
  for (std::size_t k = 0; k < depth; ++k) node = &node->children[path[k]];
  return *node;
}

// Remove the node at `path`, then every ancestor deeper than `keep_depth`
// that is left without children.
void remove_and_prune(TreeNode& root, const Path& path, std::size_t keep_depth) {
  std::size_t depth = path.size();
  while (depth > keep_depth) {
    TreeNode& parent = at(root, path, depth - 1);
    parent.children.erase(parent.children.begin() + static_cast<std::ptrdiff_t>(path[depth - 1]));
    --depth;
    if (depth <= keep_depth || !parent.children.empty()) break;
  }
}

}  // namespace

BoundaryTable apply_noise(const BoundaryTable& table, std::span<const double> draws) {
  const std::size_t n = table.rows.size();
  std::vector<double> b(n + 1);
  b[0] = table.rows.front().start;
  for (std::size_t k = 0; k < n; ++k) b[k + 1] = table.rows[k].end;
  for (std::size_t i = 1; i < n && i - 1 < draws.size(); ++i) {
    const double r = draws[i - 1];
    if (r == 0.0) continue;
    const double neighbour = r >= 0.0 ? b[i + 1] : b[i - 1];
    double moved = b[i] + std::fabs(r) * (neighbour - b[i]);
    const double lo = b[i - 1] + kMinPerturbedLength;
    const double hi = b[i + 1] - kMinPerturbedLength;
    if (lo < hi) moved = std::clamp(moved, lo, hi);
    else moved = b[i];
    b[i] = moved;
  }
  BoundaryTable out = table;
  for (std::size_t k = 0; k < n; ++k) {
    out.rows[k].start = b[k];
    out.rows[k].end = b[k + 1];
  }
  return out;
}

BoundaryTable perturb_noise(const BoundaryTable& table, double delta, Rng& rng) {
  check_delta(delta);
  if (table.rows.empty()) return table;
  std::vector<double> draws(table.rows.size() - 1);
  for (auto& r : draws) r = rng.uniform(-delta, delta);
  return apply_noise(table, draws);
}

PerturbedSentence apply_insert(const ParseTree& tree, const BoundaryTable& table,
                               std::span<const std::optional<double>> splits) {
  check_inputs(tree, table);
  TreeNode root = tree.root();
  BoundaryTable out = table;
  // Right to left so earlier terminal indices stay valid.
  for (std::size_t k = std::min(splits.size(), table.rows.size()); k-- > 0;) {
    if (!splits[k]) continue;
    const Path path = terminal_path(root, k);
    if (path.empty()) continue;  // the root itself is the preterminal
    const BoundaryRow row = out.rows[k];
    if (row.end - row.start <= 2 * kMinPerturbedLength) continue;
    const double cut = std::clamp(*splits[k], row.start + kMinPerturbedLength, row.end - kMinPerturbedLength);

    TreeNode& parent = at(root, path, path.size() - 1);
    const auto pos = static_cast<std::ptrdiff_t>(path.back());
    TreeNode left = parent.children[static_cast<std::size_t>(pos)];
    TreeNode right = left;
    left.interval = OpenInterval(row.start, cut);
    right.interval = OpenInterval(cut, row.end);
    parent.children[static_cast<std::size_t>(pos)] = std::move(left);
    parent.children.insert(parent.children.begin() + pos + 1, std::move(right));

    out.rows[k].end = cut;
    out.rows.insert(out.rows.begin() + static_cast<std::ptrdiff_t>(k) + 1, BoundaryRow{row.word, cut, row.end});
  }
  return {ParseTree(std::move(root)), std::move(out)};
}

PerturbedSentence perturb_insert(const ParseTree& tree, const BoundaryTable& table, double delta,
                                 Rng& rng) {
  check_delta(delta);
  std::vector<std::optional<double>> splits(table.rows.size());
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    if (rng.uniform01() < delta) splits[k] = rng.uniform(table.rows[k].start, table.rows[k].end);
  }
  return apply_insert(tree, table, splits);
}

PerturbedSentence apply_delete(const ParseTree& tree, const BoundaryTable& table,
                               const std::vector<bool>& remove) {
  check_inputs(tree, table);
  TreeNode root = tree.root();
  BoundaryTable out = table;
  std::size_t merged = 0;
  for (std::size_t i = 1; i < table.rows.size() && i - 1 < remove.size(); ++i) {
    if (!remove[i - 1]) continue;
    const std::size_t left = i - 1 - merged;
    const Path pu = terminal_path(root, left);
    const Path pv = terminal_path(root, left + 1);
    std::size_t lca_depth = 0;
    while (lca_depth < pu.size() && lca_depth < pv.size() && pu[lca_depth] == pv[lca_depth]) ++lca_depth;

    const TreeNode& u = at(root, pu, pu.size());
    const TreeNode& v = at(root, pv, pv.size());
    TreeNode joined;
    joined.label = u.label;
    joined.word = u.word.value_or("") + v.word.value_or("");
    joined.interval = OpenInterval(u.interval.start(), v.interval.end());

    // v lies to the right of u below the LCA, so removing it first leaves
    // u's path intact.
    remove_and_prune(root, pv, lca_depth);
    remove_and_prune(root, pu, lca_depth);
    TreeNode& lca = at(root, pu, lca_depth);
    const auto slot = std::find_if(lca.children.begin(), lca.children.end(), [&](const TreeNode& c) {
      return c.interval.start() > joined.interval.start();
    });
    lca.children.insert(slot, std::move(joined));
    recompute_hulls(root);

    out.rows[left].word += out.rows[left + 1].word;
    out.rows[left].end = out.rows[left + 1].end;
    out.rows.erase(out.rows.begin() + static_cast<std::ptrdiff_t>(left) + 1);
    ++merged;
  }
  return {ParseTree(std::move(root)), std::move(out)};
}

PerturbedSentence perturb_delete(const ParseTree& tree, const BoundaryTable& table, double delta,
                                 Rng& rng) {
  check_delta(delta);
  const std::size_t interior = table.rows.empty() ? 0 : table.rows.size() - 1;
  std::vector<bool> remove(interior);
  for (std::size_t k = 0; k < interior; ++k) remove[k] = rng.uniform01() < delta;
  return apply_delete(tree, table, remove);
}

PerturbedSentence perturb(const ParseTree& tree, const BoundaryTable& table, const PerturbSpec& spec,
                          std::uint64_t stream) {
  check_delta(spec.delta);
  Rng rng(spec.seed, stream);
  switch (spec.mode) {
    case PerturbMode::noise: {
      check_inputs(tree, table);
      BoundaryTable moved = perturb_noise(table, spec.delta, rng);
      ParseTree projected = project_to_time(tree, moved);
      return {std::move(projected), std::move(moved)};
    }
    case PerturbMode::insert:
      return perturb_insert(tree, table, spec.delta, rng);
    case PerturbMode::deletion:
      return perturb_delete(tree, table, spec.delta, rng);
  }
  throw UsageError("unknown perturbation mode");
}

}  // namespace structiou
