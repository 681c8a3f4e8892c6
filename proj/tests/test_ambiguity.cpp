#include <doctest.h>

#include <map>
#include <set>

#include "helpers.hpp"
#include "structiou/ambiguity.hpp"
#include "structiou/error.hpp"
#include "structiou/validate.hpp"

using namespace structiou;

TEST_CASE("template sentence") {
  CHECK(template_sentence(2) == std::vector<std::string>{"N", "P", "N", "P", "N"});
}

TEST_CASE("plausible trees follow the Catalan numbers") {
  CHECK(enumerate_plausible(1).size() == 1);
  CHECK(enumerate_plausible(3).size() == 5);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto trees = enumerate_plausible(n);
    CHECK(trees.size() == catalan(n));
    for (const auto& t : trees) CHECK(validate(t).empty());
  }
  CHECK(catalan(8) == 1430);
  CHECK_THROWS_AS(enumerate_plausible(0), UsageError);
  CHECK_THROWS_AS(enumerate_plausible(11), UsageError);
}

TEST_CASE("n = 2 gives the two attachments") {
  const auto trees = enumerate_plausible(2);
  REQUIRE(trees.size() == 2);
  std::set<std::string> got{serialize_bracketed(trees[0]), serialize_bracketed(trees[1])};
  CHECK(got == std::set<std::string>{serialize_bracketed(testing::pp_low()),
                                     serialize_bracketed(testing::pp_high())});
}

TEST_CASE("random binary trees") {
  Rng rng(3);
  CHECK(random_binary_tree(1, rng).node_count() == 1);
  CHECK(serialize_bracketed(random_binary_tree(2, rng)) == "(X (X w0) (X w1))");
  std::map<std::string, int> shapes;
  Rng draw(5);
  for (int k = 0; k < 10000; ++k) ++shapes[serialize_bracketed(random_binary_tree(3, draw))];
  REQUIRE(shapes.size() == 2);
  for (const auto& [shape, count] : shapes) CHECK(count / 10000.0 == doctest::Approx(0.5).epsilon(0.04));
}

TEST_CASE("ambiguity report for two repetitions") {
  AmbiguityOptions o;
  o.n = 2;
  o.samples = 20;
  o.brackets = BracketPolicy{1};
  const AmbiguityReport r = ambiguity_report(o);
  CHECK(r.plausible_count == 2);
  CHECK(r.plausible_struct_iou_min == doctest::Approx(2000.0 / 24));
  CHECK(r.plausible_parseval_min == doctest::Approx(500.0 / 7));
}

TEST_CASE("parallel report equals the serial reference") {
  AmbiguityOptions o;
  o.n = 4;
  o.samples = 30;
  o.gt_index = 3;
  const AmbiguityReport a = ambiguity_report(o);
  const AmbiguityReport b = ambiguity_report_serial(o);
  CHECK(a.random_parseval_mean == b.random_parseval_mean);
  CHECK(a.random_struct_iou_mean == b.random_struct_iou_mean);
  CHECK(a.plausible_parseval_min == b.plausible_parseval_min);
  CHECK(a.plausible_struct_iou_min == b.plausible_struct_iou_min);
}

TEST_CASE("struct-iou rates plausible parses above parseval") {
  for (std::size_t n = 1; n <= 6; ++n) {
    AmbiguityOptions o;
    o.n = n;
    o.samples = 1;
    const AmbiguityReport r = ambiguity_report(o);
    CHECK(r.plausible_struct_iou_min >= r.plausible_parseval_min);
  }
}
