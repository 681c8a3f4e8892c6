#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "structiou/rng.hpp"
#include "structiou/tree.hpp"

namespace structiou {

struct RandomTreeOptions {
  std::size_t max_nodes = 8;
  std::vector<std::string> labels{"A", "B", "C"};
  double horizon = 10.0;       // terminals fall inside (0, horizon)
  double gap_probability = 0.3;
};

/// Random timed tree with 1..max_nodes nodes, labels drawn from the
/// alphabet and random ordered terminal intervals, possibly with gaps.
/// Internal intervals are hulls, so the tree is always valid.
ParseTree random_timed_tree(Rng& rng, const RandomTreeOptions& options);

}  // namespace structiou
