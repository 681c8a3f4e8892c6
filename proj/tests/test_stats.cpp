#include <doctest.h>

#include <set>
#include <vector>

#include "structiou/error.hpp"
#include "structiou/stats.hpp"

using namespace structiou;

TEST_CASE("average ranks") {
  const std::vector<double> v{10, 20, 20, 5};
  CHECK(average_ranks(v) == std::vector<double>{2, 3.5, 3.5, 1});
}

TEST_CASE("spearman against reference values") {
  const std::vector<double> x{17, 86, 60, 77, 47, 3, 70, 87, 88, 92};
  const std::vector<double> y{70, 29, 85, 61, 80, 34, 60, 31, 73, 66};
  CHECK(*spearman(x, y) == doctest::Approx(-0.16363636363636364));
  const std::vector<double> tied{17, 86, 60, 77, 47, 3, 70, 47, 88, 92};
  CHECK(*spearman(tied, y) == doctest::Approx(0.024316221747202587));
}

TEST_CASE("spearman edge cases") {
  const std::vector<double> up{1, 2, 3, 4};
  const std::vector<double> down{9, 7, 5, 1};
  const std::vector<double> flat{2, 2, 2, 2};
  CHECK(*spearman(up, up) == 1.0);
  CHECK(*spearman(up, down) == -1.0);
  CHECK_FALSE(spearman(up, flat).has_value());
  CHECK_THROWS_AS(spearman(up, std::vector<double>{1, 2}), UsageError);
  CHECK_THROWS_AS(spearman(std::vector<double>{1}, std::vector<double>{1}), UsageError);
}

TEST_CASE("aggregate") {
  const std::vector<WeightedScore> s{{4.0, 4.0}, {6.0, 12.0}};
  CHECK(aggregate(s) == doctest::Approx(0.625));
  CHECK(aggregate(std::vector<WeightedScore>{}) == 100.0);
}

TEST_CASE("group sampling") {
  std::vector<SentenceRecord> records;
  for (int k = 0; k < 50; ++k) records.push_back({{double(k), 1.0}, {double(2 * k), 1.0}});
  const GroupedScores g = group_sample(records, 10, 4, 30);
  REQUIRE(g.groups.size() == 30);
  std::set<double> distinct;
  for (const auto& [a, b] : g.groups) {
    CHECK(b == doctest::Approx(2 * a));
    distinct.insert(a);
  }
  CHECK(distinct.size() > 1);
  // The whole corpus in one group has the corpus mean.
  CHECK(group_sample(records, 50, 4, 1).groups[0].first == doctest::Approx(24.5));
  CHECK(group_sample(records, 10, 4, 30).groups == g.groups);
  CHECK_THROWS_AS(group_sample(records, 0, 4, 3), UsageError);
  CHECK_THROWS_AS(group_sample(records, 51, 4, 3), UsageError);
}
