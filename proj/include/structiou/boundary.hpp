#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace structiou {

/// Time range of one spoken word.
struct BoundaryRow {
  std::string word;
  double start;
  double end;

  friend bool operator==(const BoundaryRow&, const BoundaryRow&) = default;
};

/// Ordered, non-overlapping word ranges of one sentence.
struct BoundaryTable {
  std::vector<BoundaryRow> rows;

  bool gap_free() const noexcept;
  friend bool operator==(const BoundaryTable&, const BoundaryTable&) = default;
};

/// Throws DataError if a row has start >= end or rows overlap / go backwards.
/// `first_line` is used to report 1-based line numbers (row k is at
/// first_line + k); pass 0 to omit them.
void check_boundaries(const BoundaryTable& table, std::size_t first_line = 0);

/// Blank-line separated blocks of `word<TAB>start<TAB>end` (any whitespace
/// accepted as separator). Throws DataError naming the offending line.
std::vector<BoundaryTable> read_boundary_file(std::istream& in);

/// Shortest round-trip decimal formatting, one blank line between blocks.
void write_boundary_file(std::ostream& out, const std::vector<BoundaryTable>& tables);

/// Remove inter-word silence by shifting each later row left by the gap
/// accumulated so far; word durations are kept.
BoundaryTable compact_silence(const BoundaryTable& table);

/// Shortest decimal string that reads back to the same double.
std::string format_seconds(double value);

}  // namespace structiou
