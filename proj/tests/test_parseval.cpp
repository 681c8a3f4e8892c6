#include <doctest.h>

#include <vector>

#include "helpers.hpp"
#include "structiou/error.hpp"
#include "structiou/parseval.hpp"

using namespace structiou;

TEST_CASE("bracket spans exclude preterminals") {
  CHECK(bracket_spans(parse_bracketed("(NP (PRP Your) (NN turn))")) == std::vector<BracketSpan>{{"NP", 0, 2}});
  CHECK(bracket_spans(testing::pp_low()).size() == 7);
  CHECK(bracket_spans(parse_bracketed("(X w)")).empty());
  // Single-word unary brackets are dropped at min_words = 2.
  CHECK(bracket_spans(testing::pp_low(), BracketPolicy{2}).size() == 4);
}

TEST_CASE("parseval scores") {
  const ParsevalScore same = parseval_f1(testing::pp_low(), testing::pp_low(), MatchMode::labeled);
  CHECK(same.f1 == 100.0);
  CHECK(same.precision == 100.0);

  const ParsevalScore pp = parseval_f1(testing::pp_low(), testing::pp_high(), MatchMode::unlabeled);
  CHECK(pp.matched == 5);
  CHECK(pp.f1 == doctest::Approx(500.0 / 7));
  const ParsevalScore pp2 =
      parseval_f1(testing::pp_low(), testing::pp_high(), MatchMode::unlabeled, BracketPolicy{2});
  CHECK(pp2.f1 == doctest::Approx(50.0));
}

TEST_CASE("only the root is shared") {
  // Two left/right branching trees over 4 words share only the root: k = 3 each.
  const ParsevalScore s = parseval_f1(parse_bracketed("(X (X (X (A a) (A b)) (A c)) (A d))"),
                                      parse_bracketed("(X (A a) (X (A b) (X (A c) (A d))))"), MatchMode::labeled);
  CHECK(s.f1 == doctest::Approx(100.0 / 3));
}

TEST_CASE("labels matter only in labeled mode") {
  const ParseTree a = parse_bracketed("(S (NP (D a) (N b)) (V c))");
  const ParseTree b = parse_bracketed("(S (VP (D a) (N b)) (V c))");
  CHECK(parseval_f1(a, b, MatchMode::labeled).f1 == doctest::Approx(50.0));
  CHECK(parseval_f1(a, b, MatchMode::unlabeled).f1 == 100.0);
}

TEST_CASE("empty conventions and errors") {
  const ParseTree w = parse_bracketed("(X w)");
  CHECK(parseval_f1(w, w, MatchMode::labeled).f1 == 100.0);
  CHECK(parseval_f1(w, parse_bracketed("(S (X w))"), MatchMode::labeled).f1 == 0.0);
  CHECK_THROWS_AS(parseval_f1(w, parse_bracketed("(S (X a) (X b))"), MatchMode::labeled), DataError);
}

TEST_CASE("parseval symmetry and micro average") {
  const ParsevalScore ab = parseval_f1(parse_bracketed("(S (NP (D a) (N b)) (V c))"),
                                       parse_bracketed("(S (D a) (VP (N b) (V c)))"), MatchMode::labeled);
  const ParsevalScore ba = parseval_f1(parse_bracketed("(S (D a) (VP (N b) (V c)))"),
                                       parse_bracketed("(S (NP (D a) (N b)) (V c))"), MatchMode::labeled);
  CHECK(ab.f1 == ba.f1);
  CHECK(ab.precision == ba.recall);
  const std::vector<ParsevalScore> all{ab, {100, 100, 100, 3, 3, 3}};
  const ParsevalScore micro = parseval_micro(all);
  CHECK(micro.f1 == doctest::Approx(200.0 * 4 / 10));
}
