#include "structiou/parseval.hpp"

#include <algorithm>
#include <string>

#include "structiou/error.hpp"

namespace structiou {

namespace {

std::size_t collect(const TreeNode& node, std::size_t start, const BracketPolicy& policy,
                    std::vector<BracketSpan>& out) {
  if (node.is_terminal()) return start + 1;
  std::size_t end = start;
  for (const auto& child : node.children) end = collect(child, end, policy, out);
  if (end - start >= policy.min_words) out.push_back({node.label, start, end});
  return end;
}

ParsevalScore from_counts(std::size_t matched, std::size_t gold, std::size_t predicted) {
  ParsevalScore s;
  s.matched = matched;
  s.gold = gold;
  s.predicted = predicted;
  if (gold == 0 && predicted == 0) {
    s.precision = s.recall = s.f1 = 100.0;
    return s;
  }
  s.precision = predicted == 0 ? 0.0 : 100.0 * static_cast<double>(matched) / static_cast<double>(predicted);
  s.recall = gold == 0 ? 0.0 : 100.0 * static_cast<double>(matched) / static_cast<double>(gold);
  s.f1 = 200.0 * static_cast<double>(matched) / static_cast<double>(gold + predicted);
  return s;
}

}  // namespace

std::vector<BracketSpan> bracket_spans(const ParseTree& tree, BracketPolicy policy) {
  std::vector<BracketSpan> out;
  collect(tree.root(), 0, policy, out);
  std::sort(out.begin(), out.end());
  return out;
}

ParsevalScore parseval_f1(const ParseTree& gold, const ParseTree& pred, MatchMode mode,
                          BracketPolicy policy) {
  if (gold.word_count() != pred.word_count()) {
    throw DataError("word count mismatch: " + std::to_string(gold.word_count()) + " vs " +
                    std::to_string(pred.word_count()));
  }
  auto g = bracket_spans(gold, policy);
  auto p = bracket_spans(pred, policy);
  if (mode == MatchMode::unlabeled) {
    for (auto& s : g) s.label.clear();
    for (auto& s : p) s.label.clear();
    std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
  }
  std::vector<BracketSpan> common;
  std::set_intersection(g.begin(), g.end(), p.begin(), p.end(), std::back_inserter(common));
  return from_counts(common.size(), g.size(), p.size());
}

ParsevalScore parseval_micro(std::span<const ParsevalScore> scores) {
  std::size_t matched = 0;
  std::size_t gold = 0;
  std::size_t predicted = 0;
  for (const auto& s : scores) {
    matched += s.matched;
    gold += s.gold;
    predicted += s.predicted;
  }
  return from_counts(matched, gold, predicted);
}

}  // namespace structiou
