#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "structiou/boundary.hpp"
#include "structiou/rng.hpp"
#include "structiou/tree.hpp"

namespace structiou {

enum class PerturbMode { noise, insert, deletion };

struct PerturbSpec {
  PerturbMode mode = PerturbMode::noise;
  double delta = 0.0;  // in [0, 1]
  std::uint64_t seed = 0;
};

/// Perturbed word ranges never shrink below this length.
inline constexpr double kMinPerturbedLength = 1e-6;

struct PerturbedSentence {
  ParseTree tree;
  BoundaryTable table;
};

/// Noise-delta: for each interior boundary b_i in turn, draw r_i ~ U(-delta,
/// delta) and move b_i by |r_i| of the way toward its right (r_i >= 0) or left
/// neighbour, using neighbours already moved earlier in the pass.
BoundaryTable perturb_noise(const BoundaryTable& table, double delta, Rng& rng);
/// Deterministic core of perturb_noise; draws[i - 1] is r_i.
BoundaryTable apply_noise(const BoundaryTable& table, std::span<const double> draws);

/// Insert-delta: each word is split with probability delta at a uniform point.
/// The split word's preterminal becomes two same-label preterminals under the
/// original parent. A word whose preterminal is the root is never split.
PerturbedSentence perturb_insert(const ParseTree& tree, const BoundaryTable& table, double delta,
                                 Rng& rng);
/// splits[k] is the split time for word k, if any.
PerturbedSentence apply_insert(const ParseTree& tree, const BoundaryTable& table,
                               std::span<const std::optional<double>> splits);

/// Delete-delta: each interior boundary is removed with probability delta.
/// The two words' preterminals are replaced by a single preterminal (left
/// label, concatenated word) under their lowest common ancestor; nodes left
/// without children are pruned.
PerturbedSentence perturb_delete(const ParseTree& tree, const BoundaryTable& table, double delta,
                                 Rng& rng);
/// remove[i - 1] deletes boundary b_i, between words i and i + 1 (1-based).
PerturbedSentence apply_delete(const ParseTree& tree, const BoundaryTable& table,
                               const std::vector<bool>& remove);

/// Dispatch on spec.mode with the stream Rng(spec.seed, stream). The tree
/// must already be projected onto the gap-free table.
PerturbedSentence perturb(const ParseTree& tree, const BoundaryTable& table, const PerturbSpec& spec,
                          std::uint64_t stream);

}  // namespace structiou
