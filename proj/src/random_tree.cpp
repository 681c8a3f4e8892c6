#include "structiou/random_tree.hpp"

#include <algorithm>

namespace structiou {

namespace {

struct Shape {
  std::vector<std::vector<std::size_t>> children;
};

TreeNode build(const Shape& shape, std::size_t id, Rng& rng, const RandomTreeOptions& options,
               double& clock, std::size_t& word) {
  TreeNode node;
  node.label = options.labels[rng.below(options.labels.size())];
  if (shape.children[id].empty()) {
    if (rng.uniform01() < options.gap_probability) clock += rng.uniform(0.05, 1.0);
    const double length = rng.uniform(0.1, 1.5);
    node.interval = OpenInterval(clock, clock + length);
    node.word = "w" + std::to_string(word++);
    clock += length;
    return node;
  }
  for (std::size_t child : shape.children[id]) {
    node.children.push_back(build(shape, child, rng, options, clock, word));
  }
  node.interval = OpenInterval(node.children.front().interval.start(),
                               node.children.back().interval.end());
  return node;
}

}  // namespace

ParseTree random_timed_tree(Rng& rng, const RandomTreeOptions& options) {
  const std::size_t count = 1 + rng.below(std::max<std::size_t>(options.max_nodes, 1));
  Shape shape;
  shape.children.resize(count);
  for (std::size_t k = 1; k < count; ++k) shape.children[rng.below(k)].push_back(k);
  double clock = rng.uniform(0.0, options.horizon * 0.2);
  std::size_t word = 0;
  return ParseTree(build(shape, 0, rng, options, clock, word));
}

}  // namespace structiou
