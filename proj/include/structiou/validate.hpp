#pragma once

#include <string>
#include <vector>

#include "structiou/tree.hpp"

namespace structiou {

struct Violation {
  std::string kind;    // "children overlap", "hull mismatch", ...
  std::string where;   // preorder path, e.g. "0.1.0"
};

/// Checks the relaxed segment tree invariants plus disjointness of every
/// unrelated node pair. An empty result means the tree is valid.
std::vector<Violation> validate(const ParseTree& tree);

}  // namespace structiou
