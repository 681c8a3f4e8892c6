#pragma once

#include <string>
#include <utility>
#include <vector>

#include "structiou/boundary.hpp"
#include "structiou/bracketed.hpp"
#include "structiou/projection.hpp"
#include "structiou/tree.hpp"

namespace testing {

inline structiou::BoundaryTable table(std::vector<std::pair<double, double>> ranges) {
  structiou::BoundaryTable t;
  for (std::size_t k = 0; k < ranges.size(); ++k) {
    t.rows.push_back({"w" + std::to_string(k), ranges[k].first, ranges[k].second});
  }
  return t;
}

inline structiou::ParseTree timed(const std::string& bracketed,
                                  std::vector<std::pair<double, double>> ranges) {
  return structiou::project_to_time(structiou::parse_bracketed(bracketed), table(std::move(ranges)));
}

inline structiou::ParseTree even(const std::string& bracketed) {
  return structiou::project_even(structiou::parse_bracketed(bracketed));
}

// Gold "Your turn" and the structurally wrong prediction with an extra verb.
inline structiou::ParseTree your_turn_gold() {
  return timed("(NP (PRP Your) (NN turn))", {{2.56, 2.72}, {2.72, 3.01}});
}
inline structiou::ParseTree your_turn_pred() {
  return timed("(VP (VBP uh) (NP (PRP Your) (NN turn)))", {{2.55, 2.56}, {2.56, 2.72}, {2.72, 3.01}});
}

// The two parses of N P N P N: PP attached low, and PP attached to the outer NP.
inline structiou::ParseTree pp_low() {
  return even("(NP (NP (N N)) (PP (P P) (NP (NP (N N)) (PP (P P) (NP (N N))))))");
}
inline structiou::ParseTree pp_high() {
  return even("(NP (NP (NP (N N)) (PP (P P) (NP (N N)))) (PP (P P) (NP (N N))))");
}

}  // namespace testing
