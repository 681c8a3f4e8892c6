#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "structiou/align.hpp"
#include "structiou/tree.hpp"

namespace structiou {

/// A labeled constituent over word positions [start, end).
struct BracketSpan {
  std::string label;
  std::size_t start;
  std::size_t end;

  friend auto operator<=>(const BracketSpan&, const BracketSpan&) = default;
};

struct BracketPolicy {
  /// Brackets covering fewer words are dropped. 1 keeps every non-preterminal
  /// constituent; 2 also drops unary constituents over a single word.
  std::size_t min_words = 1;
};

/// One span per non-preterminal node (preterminals never count), sorted.
/// Word positions come from terminal order, so time projection is ignored.
std::vector<BracketSpan> bracket_spans(const ParseTree& tree, BracketPolicy policy = {});

struct ParsevalScore {
  double precision = 0.0;  // percent
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t gold = 0;
  std::size_t predicted = 0;
};

/// Multiset bracket matching. Both sets empty scores 100; exactly one empty
/// scores 0. Throws DataError if the word counts differ.
ParsevalScore parseval_f1(const ParseTree& gold, const ParseTree& pred, MatchMode mode,
                          BracketPolicy policy = {});

/// Micro-averaged scores over summed counts.
ParsevalScore parseval_micro(std::span<const ParsevalScore> scores);

}  // namespace structiou
