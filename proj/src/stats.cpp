#include "structiou/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "structiou/error.hpp"
#include "structiou/rng.hpp"

namespace structiou {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = rank;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw UsageError("spearman: length mismatch");
  if (xs.size() < 2) throw UsageError("spearman: need at least two observations");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double mean = 0.5 * static_cast<double>(xs.size() + 1);
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < rx.size(); ++k) {
    const double dx = rx[k] - mean;
    const double dy = ry[k] - mean;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

double aggregate(std::span<const WeightedScore> scores, double empty_value) {
  double sum = 0.0;
  double weight = 0.0;
  for (const auto& s : scores) {
    sum += s.sum;
    weight += s.weight;
  }
  return weight > 0.0 ? sum / weight : empty_value;
}

GroupedScores group_sample(std::span<const SentenceRecord> records, std::size_t group_size,
                           std::uint64_t seed, std::size_t groups) {
  if (records.empty()) throw UsageError("group_sample: empty corpus");
  if (group_size == 0 || group_size > records.size()) {
    throw UsageError("group size must be in [1, " + std::to_string(records.size()) + "]");
  }
  GroupedScores out;
  out.groups.reserve(groups);
  std::vector<std::size_t> pool(records.size());
  std::vector<WeightedScore> a(group_size);
  std::vector<WeightedScore> b(group_size);
  for (std::size_t g = 0; g < groups; ++g) {
    Rng rng(seed, g);
    std::iota(pool.begin(), pool.end(), 0);
    // Partial Fisher-Yates: the first group_size slots are the sample.
    for (std::size_t k = 0; k < group_size; ++k) {
      const std::size_t pick = k + static_cast<std::size_t>(rng.below(pool.size() - k));
      std::swap(pool[k], pool[pick]);
      a[k] = records[pool[k]].a;
      b[k] = records[pool[k]].b;
    }
    out.groups.emplace_back(aggregate(a), aggregate(b));
  }
  return out;
}

}  // namespace structiou
