#pragma once

#include <cstddef>

#include "structiou/align.hpp"
#include "structiou/tree.hpp"

namespace structiou {

/// Which feasibility rules the exhaustive search enforces.
/// `order_consistent` also forbids matching two unrelated nodes in the
/// opposite left-to-right order; `def10_only` enforces only one-to-one plus
/// ancestor/descendant consistency.
enum class OracleVariant { order_consistent, def10_only };

/// Upper bound on node_count(t1) * node_count(t2).
inline constexpr std::size_t kOracleMaxPairs = 400;

/// Exhaustive branch-and-bound over positive-weight candidate pairs. Meant
/// as a test oracle for small trees. Throws CapacityError past the size guard.
Alignment oracle_alignment(const ParseTree& t1, const ParseTree& t2, MatchMode mode,
                           OracleVariant variant);

/// True when the pairs are one-to-one, pairwise non-conflicted and (for
/// order_consistent) non-crossing.
bool feasible(const IndexedTree& t1, const IndexedTree& t2, const Alignment& alignment,
              OracleVariant variant);

}  // namespace structiou
