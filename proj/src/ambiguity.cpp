#include "structiou/ambiguity.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "structiou/error.hpp"
#include "structiou/metric.hpp"
#include "structiou/projection.hpp"

namespace structiou {

namespace {

constexpr std::size_t kMaxTemplateN = 10;

TreeNode preterminal(const char* label) {
  TreeNode node;
  node.label = label;
  node.word = label;
  return node;
}

// All NP trees over nouns first..last (inclusive noun indices).
std::vector<TreeNode> noun_phrases(std::size_t first, std::size_t last) {
  std::vector<TreeNode> out;
  if (first == last) {
    TreeNode np;
    np.label = "NP";
    np.children.push_back(preterminal("N"));
    out.push_back(std::move(np));
    return out;
  }
  for (std::size_t split = first; split < last; ++split) {
    const auto left = noun_phrases(first, split);
    const auto right = noun_phrases(split + 1, last);
    for (const auto& l : left) {
      for (const auto& r : right) {
        TreeNode pp;
        pp.label = "PP";
        pp.children.push_back(preterminal("P"));
        pp.children.push_back(r);
        TreeNode np;
        np.label = "NP";
        np.children.push_back(l);
        np.children.push_back(std::move(pp));
        out.push_back(std::move(np));
      }
    }
  }
  return out;
}

void check_options(const AmbiguityOptions& options, std::size_t plausible) {
  if (options.samples == 0) throw UsageError("samples must be >= 1");
  if (options.gt_index >= plausible) {
    throw UsageError("gt index " + std::to_string(options.gt_index) + " out of range (" +
                     std::to_string(plausible) + " plausible trees)");
  }
}

struct Setup {
  std::vector<ParseTree> plausible;
  std::size_t words;
};

Setup prepare(const AmbiguityOptions& options) {
  Setup s{enumerate_plausible(options.n), 2 * options.n + 1};
  check_options(options, s.plausible.size());
  return s;
}

double unlabeled_struct_iou(const ParseTree& a, const ParseTree& b) {
  return 100.0 * struct_iou_sentence(a, b, MatchMode::unlabeled).value;
}

AmbiguityReport finish(const AmbiguityOptions& options, const Setup& setup,
                       const std::vector<double>& rand_pe, const std::vector<double>& rand_si,
                       const std::vector<double>& plaus_pe, const std::vector<double>& plaus_si) {
  AmbiguityReport r;
  r.n = options.n;
  r.samples = options.samples;
  r.plausible_count = setup.plausible.size();
  r.gt_index = options.gt_index;
  for (std::size_t k = 0; k < options.samples; ++k) {
    r.random_parseval_mean += rand_pe[k];
    r.random_struct_iou_mean += rand_si[k];
  }
  r.random_parseval_mean /= static_cast<double>(options.samples);
  r.random_struct_iou_mean /= static_cast<double>(options.samples);

  // With a single plausible tree there is nothing else to compare against.
  r.plausible_parseval_min = 100.0;
  r.plausible_struct_iou_min = 100.0;
  for (std::size_t k = 0; k < setup.plausible.size(); ++k) {
    if (k == options.gt_index) continue;
    r.plausible_parseval_min = std::min(r.plausible_parseval_min, plaus_pe[k]);
    r.plausible_struct_iou_min = std::min(r.plausible_struct_iou_min, plaus_si[k]);
  }
  return r;
}

}  // namespace

std::vector<std::string> template_sentence(std::size_t n) {
  std::vector<std::string> words{"N"};
  for (std::size_t k = 0; k < n; ++k) {
    words.emplace_back("P");
    words.emplace_back("N");
  }
  return words;
}

std::uint64_t catalan(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<ParseTree> enumerate_plausible(std::size_t n) {
  if (n < 1 || n > kMaxTemplateN) {
    throw UsageError("template repetition count must be in [1, " + std::to_string(kMaxTemplateN) + "]");
  }
  std::vector<ParseTree> out;
  for (auto& root : noun_phrases(0, n)) out.push_back(project_even(ParseTree(std::move(root))));
  return out;
}

ParseTree random_binary_tree(std::size_t word_count, Rng& rng) {
  std::vector<TreeNode> units;
  units.reserve(word_count);
  for (std::size_t k = 0; k < word_count; ++k) {
    TreeNode leaf;
    leaf.label = "X";
    leaf.word = "w" + std::to_string(k);
    units.push_back(std::move(leaf));
  }
  while (units.size() > 1) {
    const auto at = static_cast<std::ptrdiff_t>(rng.below(units.size() - 1));
    TreeNode merged;
    merged.label = "X";
    merged.children.push_back(std::move(units[at]));
    merged.children.push_back(std::move(units[at + 1]));
    units.erase(units.begin() + at + 1);
    units[at] = std::move(merged);
  }
  return project_even(ParseTree(std::move(units.front())));
}

AmbiguityReport ambiguity_report(const AmbiguityOptions& options) {
  const Setup setup = prepare(options);
  const ParseTree& gt = setup.plausible[options.gt_index];
  std::vector<double> rand_pe(options.samples);
  std::vector<double> rand_si(options.samples);
  std::vector<double> plaus_pe(setup.plausible.size());
  std::vector<double> plaus_si(setup.plausible.size());

  const auto samples = static_cast<long>(options.samples);
  const auto plausible = static_cast<long>(setup.plausible.size());
#pragma omp parallel
  {
#pragma omp for schedule(dynamic) nowait
    for (long k = 0; k < samples; ++k) {
      const auto i = static_cast<std::size_t>(k);
      Rng rng(options.seed, i);
      const ParseTree tree = random_binary_tree(setup.words, rng);
      rand_pe[i] = parseval_f1(gt, tree, MatchMode::unlabeled, options.brackets).f1;
      rand_si[i] = unlabeled_struct_iou(gt, tree);
    }
#pragma omp for schedule(dynamic)
    for (long k = 0; k < plausible; ++k) {
      const auto i = static_cast<std::size_t>(k);
      if (i == options.gt_index) continue;
      plaus_pe[i] = parseval_f1(gt, setup.plausible[i], MatchMode::unlabeled, options.brackets).f1;
      plaus_si[i] = unlabeled_struct_iou(gt, setup.plausible[i]);
    }
  }
  return finish(options, setup, rand_pe, rand_si, plaus_pe, plaus_si);
}

AmbiguityReport ambiguity_report_serial(const AmbiguityOptions& options) {
  const Setup setup = prepare(options);
  const ParseTree& gt = setup.plausible[options.gt_index];
  std::vector<double> rand_pe(options.samples);
  std::vector<double> rand_si(options.samples);
  std::vector<double> plaus_pe(setup.plausible.size());
  std::vector<double> plaus_si(setup.plausible.size());
  for (std::size_t i = 0; i < options.samples; ++i) {
    Rng rng(options.seed, i);
    const ParseTree tree = random_binary_tree(setup.words, rng);
    rand_pe[i] = parseval_f1(gt, tree, MatchMode::unlabeled, options.brackets).f1;
    rand_si[i] = unlabeled_struct_iou(gt, tree);
  }
  for (std::size_t i = 0; i < setup.plausible.size(); ++i) {
    if (i == options.gt_index) continue;
    plaus_pe[i] = parseval_f1(gt, setup.plausible[i], MatchMode::unlabeled, options.brackets).f1;
    plaus_si[i] = unlabeled_struct_iou(gt, setup.plausible[i]);
  }
  return finish(options, setup, rand_pe, rand_si, plaus_pe, plaus_si);
}

}  // namespace structiou
