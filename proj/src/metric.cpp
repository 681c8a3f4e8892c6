#include "structiou/metric.hpp"

#include <string>

#include "structiou/error.hpp"

namespace structiou {

namespace {

void check_lengths(std::span<const ParseTree> first, std::span<const ParseTree> second) {
  if (first.size() != second.size()) {
    throw DataError("corpus length mismatch: " + std::to_string(first.size()) + " vs " +
                    std::to_string(second.size()) + " trees");
  }
}

}  // namespace

double CorpusScore::sentence_mean() const noexcept {
  if (per_sentence.empty()) return 0.0;
  double sum = 0.0;
  for (const auto& s : per_sentence) sum += s.value;
  return sum / static_cast<double>(per_sentence.size());
}

SentenceScore struct_iou_sentence(const ParseTree& t1, const ParseTree& t2, MatchMode mode,
                                  Normalization norm) {
  SentenceScore score;
  score.objective = AlignmentSolver(t1, t2, mode).objective();
  score.n1 = t1.node_count();
  score.n2 = t2.node_count();
  const double scale = norm == Normalization::dice ? 2.0 : 1.0;
  score.value = scale * score.objective / static_cast<double>(score.n1 + score.n2);
  return score;
}

double corpus_value(std::span<const SentenceScore> scores) noexcept {
  double num = 0.0;
  double den = 0.0;
  for (const auto& s : scores) {
    const double w = static_cast<double>(s.n1 + s.n2);
    num += w * s.value;
    den += w;
  }
  return den > 0.0 ? num / den : 0.0;
}

CorpusScore struct_iou_corpus(std::span<const ParseTree> first, std::span<const ParseTree> second,
                              MatchMode mode, Normalization norm) {
  check_lengths(first, second);
  CorpusScore out;
  out.per_sentence.resize(first.size());
  const auto count = static_cast<long>(first.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    out.per_sentence[i] = struct_iou_sentence(first[i], second[i], mode, norm);
  }
  out.value = corpus_value(out.per_sentence);
  return out;
}

CorpusScore struct_iou_corpus_serial(std::span<const ParseTree> first,
                                     std::span<const ParseTree> second, MatchMode mode,
                                     Normalization norm) {
  check_lengths(first, second);
  CorpusScore out;
  out.per_sentence.reserve(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    out.per_sentence.push_back(struct_iou_sentence(first[i], second[i], mode, norm));
  }
  out.value = corpus_value(out.per_sentence);
  return out;
}

}  // namespace structiou
