#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "structiou/align.hpp"
#include "structiou/tree.hpp"

namespace structiou {

/// How the matched-IoU sum is normalized. `dice` uses 2 * sum / (n1 + n2),
/// which is 1 for identical trees; `literal` uses sum / (n1 + n2).
enum class Normalization { dice, literal };

struct SentenceScore {
  double value = 0.0;
  double objective = 0.0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

struct CorpusScore {
  double value = 0.0;
  std::vector<SentenceScore> per_sentence;

  /// Unweighted mean of the sentence values.
  double sentence_mean() const noexcept;
};

SentenceScore struct_iou_sentence(const ParseTree& t1, const ParseTree& t2, MatchMode mode,
                                  Normalization norm = Normalization::dice);

/// Node-count weighted corpus score; sentences are scored in parallel and
/// aggregated in input order. Throws DataError on length mismatch.
CorpusScore struct_iou_corpus(std::span<const ParseTree> first, std::span<const ParseTree> second,
                              MatchMode mode, Normalization norm = Normalization::dice);

/// Single-threaded reference for struct_iou_corpus.
CorpusScore struct_iou_corpus_serial(std::span<const ParseTree> first,
                                     std::span<const ParseTree> second, MatchMode mode,
                                     Normalization norm = Normalization::dice);

/// Node-count weighted aggregate of already computed sentence scores.
double corpus_value(std::span<const SentenceScore> scores) noexcept;

}  // namespace structiou
