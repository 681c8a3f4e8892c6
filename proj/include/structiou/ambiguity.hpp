#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "structiou/parseval.hpp"
#include "structiou/rng.hpp"
#include "structiou/tree.hpp"

namespace structiou {

/// Words of the template `N (P N){n}`: N P N ... N, 2n + 1 tokens.
std::vector<std::string> template_sentence(std::size_t n);

/// Every tree of NP -> N | NP PP, PP -> P NP over the template, with N and P
/// preterminals. Ordered by the split point of the outermost NP first, then
/// recursively left and right; there are Catalan(n) of them. 1 <= n <= 10,
/// UsageError otherwise.
std::vector<ParseTree> enumerate_plausible(std::size_t n);

/// Binary tree over `word_count` words built by repeatedly merging a
/// uniformly chosen adjacent pair of units; every node is labeled `X`.
ParseTree random_binary_tree(std::size_t word_count, Rng& rng);

std::uint64_t catalan(std::size_t n);

struct AmbiguityOptions {
  std::size_t n = 8;
  std::size_t samples = 100;
  std::uint64_t seed = 7;
  std::size_t gt_index = 0;
  BracketPolicy brackets{2};
};

/// All scores are unlabeled and scaled by 100.
struct AmbiguityReport {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t plausible_count = 0;
  std::size_t gt_index = 0;
  double random_parseval_mean = 0.0;
  double random_struct_iou_mean = 0.0;
  double plausible_parseval_min = 0.0;
  double plausible_struct_iou_min = 0.0;
};

/// Ground truth vs. random binary trees (means) and vs. every other
/// plausible tree (minima). Samples and plausible trees are scored in parallel.
AmbiguityReport ambiguity_report(const AmbiguityOptions& options);

/// Single-threaded reference for ambiguity_report.
AmbiguityReport ambiguity_report_serial(const AmbiguityOptions& options);

}  // namespace structiou
