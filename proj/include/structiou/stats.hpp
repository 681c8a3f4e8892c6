#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace structiou {

/// Average ranks (1-based) with ties sharing the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

/// Spearman's rho with average ranks for ties. Returns nullopt when either
/// side has constant ranks. Throws UsageError on length mismatch or fewer
/// than two observations.
std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys);

/// A score that aggregates across sentences as sum / weight. Struct-IoU uses
/// sum = (n1 + n2) * value, weight = n1 + n2; micro F1 uses
/// sum = 200 * matched, weight = gold + predicted; a plain mean uses weight 1.
struct WeightedScore {
  double sum = 0.0;
  double weight = 0.0;
};

struct SentenceRecord {
  WeightedScore a;
  WeightedScore b;
};

struct GroupedScores {
  std::vector<std::pair<double, double>> groups;
};

/// Value of an aggregate; `empty_value` covers zero total weight.
double aggregate(std::span<const WeightedScore> scores, double empty_value = 100.0);

/// Draws `groups` random subsets of `group_size` sentences (distinct within a
/// group, independent across groups) and aggregates both metrics per group.
/// Throws UsageError if group_size is 0 or exceeds the corpus size.
GroupedScores group_sample(std::span<const SentenceRecord> records, std::size_t group_size,
                           std::uint64_t seed, std::size_t groups);

}  // namespace structiou
