#include "structiou/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "structiou/error.hpp"

namespace structiou {

namespace {

bool crossing(const IndexedTree& t1, const IndexedTree& t2, NodePair a, NodePair b) {
  if (t1.related(a.first, b.first) || t2.related(a.second, b.second)) return false;
  // Unrelated nodes are ordered left to right by preorder.
  return (a.first < b.first) != (a.second < b.second);
}

bool compatible(const IndexedTree& t1, const IndexedTree& t2, NodePair a, NodePair b,
                OracleVariant variant) {
  if (a.first == b.first || a.second == b.second) return false;
  if (conflicted(t1, t2, a, b)) return false;
  return variant == OracleVariant::def10_only || !crossing(t1, t2, a, b);
}

struct Candidate {
  NodePair pair;
  double weight;
};

class Search {
 public:
  Search(const IndexedTree& t1, const IndexedTree& t2, std::vector<Candidate> candidates,
         OracleVariant variant)
      : t1_(t1), t2_(t2), cand_(std::move(candidates)), variant_(variant),
        used1_(t1.size(), false), used2_(t2.size(), false) {}

  void run() { descend(0, 0.0); }

  double best_value() const { return best_; }
  const std::vector<NodePair>& best_pairs() const { return best_pairs_; }

 private:
  // Admissible bound: every still-free first-tree node gains at most its
  // heaviest remaining candidate with a free partner.
  double bound(std::size_t from) const {
    std::vector<double> top(t1_.size(), 0.0);
    for (std::size_t k = from; k < cand_.size(); ++k) {
      const auto& c = cand_[k];
      if (used1_[c.pair.first] || used2_[c.pair.second]) continue;
      top[c.pair.first] = std::max(top[c.pair.first], c.weight);
    }
    double sum = 0.0;
    for (double w : top) sum += w;
    return sum;
  }

  void descend(std::size_t k, double value) {
    if (value > best_) {
      best_ = value;
      best_pairs_ = chosen_;
    }
    if (k == cand_.size()) return;
    if (value + bound(k) <= best_) return;

    const Candidate& c = cand_[k];
    bool ok = !used1_[c.pair.first] && !used2_[c.pair.second];
    for (std::size_t i = 0; ok && i < chosen_.size(); ++i) {
      ok = compatible(t1_, t2_, chosen_[i], c.pair, variant_);
    }
    if (ok) {
      chosen_.push_back(c.pair);
      used1_[c.pair.first] = used2_[c.pair.second] = true;
      descend(k + 1, value + c.weight);
      used1_[c.pair.first] = used2_[c.pair.second] = false;
      chosen_.pop_back();
    }
    descend(k + 1, value);
  }

  const IndexedTree& t1_;
  const IndexedTree& t2_;
  std::vector<Candidate> cand_;
  OracleVariant variant_;
  std::vector<bool> used1_;
  std::vector<bool> used2_;
  std::vector<NodePair> chosen_;
  std::vector<NodePair> best_pairs_;
  double best_ = 0.0;
};

}  // namespace

bool feasible(const IndexedTree& t1, const IndexedTree& t2, const Alignment& alignment,
              OracleVariant variant) {
  const auto& pairs = alignment.pairs;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (pairs[i].first >= t1.size() || pairs[i].second >= t2.size()) return false;
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (!compatible(t1, t2, pairs[i], pairs[j], variant)) return false;
    }
  }
  return true;
}

Alignment oracle_alignment(const ParseTree& t1, const ParseTree& t2, MatchMode mode,
                           OracleVariant variant) {
  if (t1.node_count() * t2.node_count() > kOracleMaxPairs) {
    throw CapacityError("oracle size guard exceeded: " + std::to_string(t1.node_count()) + " x " +
                        std::to_string(t2.node_count()) + " nodes");
  }
  const IndexedTree i1(t1);
  const IndexedTree i2(t2);
  std::vector<Candidate> candidates;
  for (NodeId a = 0; a < i1.size(); ++a) {
    for (NodeId b = 0; b < i2.size(); ++b) {
      const double w = match_weight(i1.node(a), i2.node(b), mode);
      if (w > 0.0) candidates.push_back({{a, b}, w});
    }
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate& x, const Candidate& y) { return x.weight > y.weight; });

  Search search(i1, i2, std::move(candidates), variant);
  search.run();

  Alignment out;
  out.pairs = search.best_pairs();
  std::sort(out.pairs.begin(), out.pairs.end());
  for (const auto& p : out.pairs) out.objective += match_weight(i1.node(p.first), i2.node(p.second), mode);
  return out;
}

}  // namespace structiou
