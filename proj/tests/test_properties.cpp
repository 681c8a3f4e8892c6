#include <doctest.h>

#include <cmath>
#include <functional>

#include "structiou/align.hpp"
#include "structiou/indexed_tree.hpp"
#include "structiou/metric.hpp"
#include "structiou/oracle.hpp"
#include "structiou/random_tree.hpp"
#include "structiou/validate.hpp"

using namespace structiou;

namespace {

ParseTree transformed(const ParseTree& tree, const std::function<double(double)>& fn) {
  TreeNode root = tree.root();
  std::function<void(TreeNode&)> visit = [&](TreeNode& n) {
    n.interval = OpenInterval(fn(n.interval.start()), fn(n.interval.end()));
    for (auto& c : n.children) visit(c);
  };
  visit(root);
  return ParseTree(std::move(root));
}

ParseTree relabeled(const ParseTree& tree, const std::string& label) {
  TreeNode root = tree.root();
  std::function<void(TreeNode&)> visit = [&](TreeNode& n) {
    n.label = label;
    for (auto& c : n.children) visit(c);
  };
  visit(root);
  return ParseTree(std::move(root));
}

double pair_sum(const ParseTree& t1, const ParseTree& t2, const Alignment& a, MatchMode mode) {
  const IndexedTree i1(t1);
  const IndexedTree i2(t2);
  double sum = 0.0;
  for (const auto& p : a.pairs) sum += match_weight(i1.node(p.first), i2.node(p.second), mode);
  return sum;
}

}  // namespace

TEST_CASE("DP matches the exhaustive oracle") {
  RandomTreeOptions options;
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(101, t);
    const ParseTree t1 = random_timed_tree(rng, options);
    const ParseTree t2 = random_timed_tree(rng, options);
    const MatchMode mode = t % 2 ? MatchMode::unlabeled : MatchMode::labeled;
    const Alignment dp = max_weight_alignment(t1, t2, mode);
    const Alignment oracle = oracle_alignment(t1, t2, mode, OracleVariant::order_consistent);
    const Alignment loose = oracle_alignment(t1, t2, mode, OracleVariant::def10_only);
    CHECK(dp.objective == doctest::Approx(oracle.objective).epsilon(1e-12));
    CHECK(loose.objective == doctest::Approx(oracle.objective).epsilon(1e-12));
    CHECK(feasible(IndexedTree(t1), IndexedTree(t2), dp, OracleVariant::order_consistent));
    CHECK(feasible(IndexedTree(t1), IndexedTree(t2), oracle, OracleVariant::order_consistent));
    CHECK(pair_sum(t1, t2, dp, mode) == doctest::Approx(dp.objective));
  }
}

TEST_CASE("random trees satisfy the containment and disjointness laws") {
  RandomTreeOptions options;
  options.max_nodes = 16;
  for (std::uint64_t t = 0; t < 300; ++t) {
    Rng rng(202, t);
    const ParseTree tree = random_timed_tree(rng, options);
    REQUIRE(validate(tree).empty());
    const IndexedTree idx(tree);
    for (NodeId a = 0; a < idx.size(); ++a) {
      for (NodeId b = 0; b < idx.size(); ++b) {
        if (a == b) continue;
        if (idx.is_ancestor(a, b)) CHECK(contains(idx.interval(a), idx.interval(b)));
        CHECK(idx.related(a, b) != disjoint(idx.interval(a), idx.interval(b)));
      }
    }
  }
}

TEST_CASE("self alignment counts nodes") {
  RandomTreeOptions options;
  options.max_nodes = 30;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(303, t);
    const ParseTree tree = random_timed_tree(rng, options);
    CHECK(max_weight_alignment(tree, tree, MatchMode::labeled).objective == doctest::Approx(tree.node_count()));
    CHECK(struct_iou_sentence(tree, tree, MatchMode::labeled).value == doctest::Approx(1.0));
  }
}

TEST_CASE("symmetry, shift and scale invariance") {
  RandomTreeOptions options;
  options.max_nodes = 12;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(404, t);
    const ParseTree t1 = random_timed_tree(rng, options);
    const ParseTree t2 = random_timed_tree(rng, options);
    const double v = struct_iou_sentence(t1, t2, MatchMode::unlabeled).value;
    CHECK(v >= 0.0);
    CHECK(v <= 1.0 + 1e-12);
    CHECK(struct_iou_sentence(t2, t1, MatchMode::unlabeled).value == doctest::Approx(v).epsilon(1e-12));
    auto shift = [](double x) { return x + 3.25; };
    auto scale = [](double x) { return x * 2.5; };
    CHECK(struct_iou_sentence(transformed(t1, shift), transformed(t2, shift), MatchMode::unlabeled).value ==
          doctest::Approx(v).epsilon(1e-9));
    CHECK(struct_iou_sentence(transformed(t1, scale), transformed(t2, scale), MatchMode::unlabeled).value ==
          doctest::Approx(v).epsilon(1e-9));
    CHECK(struct_iou_sentence(t1, t2, MatchMode::labeled).value <= v + 1e-12);
  }
}

TEST_CASE("labeled mode sees label changes") {
  RandomTreeOptions options;
  for (std::uint64_t t = 0; t < 50; ++t) {
    Rng rng(505, t);
    const ParseTree tree = random_timed_tree(rng, options);
    const ParseTree other = relabeled(tree, "Z");
    CHECK(struct_iou_sentence(tree, other, MatchMode::labeled).value == 0.0);
    CHECK(struct_iou_sentence(tree, other, MatchMode::unlabeled).value == doctest::Approx(1.0));
  }
}
