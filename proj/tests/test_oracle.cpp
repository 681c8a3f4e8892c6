#include <doctest.h>

#include "helpers.hpp"
#include "structiou/align.hpp"
#include "structiou/error.hpp"
#include "structiou/indexed_tree.hpp"
#include "structiou/oracle.hpp"

using namespace structiou;

TEST_CASE("oracle on the small fixtures") {
  for (auto v : {OracleVariant::order_consistent, OracleVariant::def10_only}) {
    CHECK(oracle_alignment(testing::your_turn_gold(), testing::your_turn_gold(), MatchMode::labeled, v).objective == 3.0);
    CHECK(oracle_alignment(testing::your_turn_pred(), testing::your_turn_gold(), MatchMode::labeled, v).objective ==
          doctest::Approx(3.0));
  }
  const ParseTree low = testing::pp_low();
  const ParseTree high = testing::pp_high();
  const Alignment a = oracle_alignment(low, high, MatchMode::unlabeled, OracleVariant::order_consistent);
  CHECK(a.objective == doctest::Approx(10.0));
  CHECK(feasible(IndexedTree(low), IndexedTree(high), a,
                 OracleVariant::order_consistent));
}

TEST_CASE("positive-IoU alignments never cross") {
  // Unrelated nodes are disjoint in both trees, so overlapping pairs keep
  // their left-to-right order and the two variants coincide.
  const ParseTree t1 = testing::timed("(S (A x) (B y))", {{0, 1}, {1, 2}});
  const ParseTree t2 = testing::timed("(S (B x) (A y))", {{0.5, 1.5}, {1.5, 2.5}});
  const double ordered =
      oracle_alignment(t1, t2, MatchMode::labeled, OracleVariant::order_consistent).objective;
  const Alignment loose = oracle_alignment(t1, t2, MatchMode::labeled, OracleVariant::def10_only);
  CHECK(ordered == doctest::Approx(max_weight_alignment(t1, t2, MatchMode::labeled).objective));
  CHECK(loose.objective == doctest::Approx(ordered));
  CHECK(feasible(IndexedTree(t1), IndexedTree(t2), loose, OracleVariant::order_consistent));
  // An explicitly crossed pair set is rejected only by the ordered variant.
  const Alignment crossed{{{1, 2}, {2, 1}}, 0.0};
  CHECK(feasible(IndexedTree(t1), IndexedTree(t2), crossed, OracleVariant::def10_only));
  CHECK_FALSE(feasible(IndexedTree(t1), IndexedTree(t2), crossed, OracleVariant::order_consistent));
}

TEST_CASE("feasibility checks") {
  const ParseTree gold = testing::your_turn_gold();
  const IndexedTree t(gold);
  CHECK(feasible(t, t, Alignment{{{0, 0}, {1, 1}}, 2.0}, OracleVariant::order_consistent));
  CHECK_FALSE(feasible(t, t, Alignment{{{0, 0}, {0, 1}}, 0.0}, OracleVariant::def10_only));
  CHECK_FALSE(feasible(t, t, Alignment{{{0, 1}, {1, 0}}, 0.0}, OracleVariant::def10_only));
}

TEST_CASE("oracle size guard") {
  std::string big = "(S";
  for (int k = 0; k < 25; ++k) big += " (X w)";
  big += ")";
  const ParseTree t = testing::even(big);
  CHECK_THROWS_AS(oracle_alignment(t, t, MatchMode::labeled, OracleVariant::order_consistent), CapacityError);
}
