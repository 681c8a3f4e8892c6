#include "structiou/projection.hpp"

#include <stdexcept>
#include <string>

#include "structiou/error.hpp"

namespace structiou {

namespace {

template <typename IntervalOf>
void assign_terminals(TreeNode& node, std::size_t& next, IntervalOf&& interval_of) {
  if (node.is_terminal()) {
    node.interval = interval_of(next++);
    return;
  }
  for (auto& child : node.children) assign_terminals(child, next, interval_of);
}

}  // namespace

ParseTree project_to_time(const ParseTree& tree, const BoundaryTable& table) {
  if (tree.word_count() != table.rows.size()) {
    throw DataError("tree has " + std::to_string(tree.word_count()) + " words but boundary table has " +
                    std::to_string(table.rows.size()) + " rows");
  }
  if (!table.gap_free()) throw DataError("boundary table has inter-word gaps; compact silence first");
  TreeNode root = tree.root();
  std::size_t next = 0;
  try {
    assign_terminals(root, next, [&](std::size_t k) {
      return OpenInterval(table.rows[k].start, table.rows[k].end);
    });
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string("zero-length word interval: ") + e.what());
  }
  recompute_hulls(root);
  return ParseTree(std::move(root));
}

ParseTree project_even(const ParseTree& tree) {
  TreeNode root = tree.root();
  std::size_t next = 0;
  assign_terminals(root, next, [](std::size_t k) {
    return OpenInterval(static_cast<double>(k), static_cast<double>(k + 1));
  });
  recompute_hulls(root);
  return ParseTree(std::move(root));
}

BoundaryTable boundaries_of(const ParseTree& tree) {
  BoundaryTable table;
  for (const TreeNode* leaf : terminals(tree.root())) {
    table.rows.push_back({leaf->word.value_or("<W>"), leaf->interval.start(), leaf->interval.end()});
  }
  return table;
}

}  // namespace structiou
