#pragma once

#include "structiou/boundary.hpp"
#include "structiou/tree.hpp"

namespace structiou {

/// Terminal k takes the time range of row k; internal nodes become hulls.
/// Requires equal word/row counts and a gap-free table (DataError otherwise).
ParseTree project_to_time(const ParseTree& tree, const BoundaryTable& table);

/// Word k occupies (k, k+1); used for text parses.
ParseTree project_even(const ParseTree& tree);

/// Word payloads and terminal intervals as a boundary table.
BoundaryTable boundaries_of(const ParseTree& tree);

}  // namespace structiou
