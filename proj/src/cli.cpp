#include "structiou/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "structiou/ambiguity.hpp"
#include "structiou/boundary.hpp"
#include "structiou/bracketed.hpp"
#include "structiou/error.hpp"
#include "structiou/metric.hpp"
#include "structiou/oracle.hpp"
#include "structiou/parseval.hpp"
#include "structiou/perturb.hpp"
#include "structiou/projection.hpp"
#include "structiou/random_tree.hpp"
#include "structiou/stats.hpp"

namespace structiou::cli {

namespace {

using json = nlohmann::json;

struct RunConfig {
  std::string gold;
  std::string pred;
  std::string gold_bounds;
  std::string pred_bounds;
  bool even = false;
  bool labeled = false;
  bool unlabeled = false;
  bool literal_normalization = false;
  bool compact = false;
  std::string format = "tsv";
  std::string out;
  std::uint64_t seed = 7;
  double delta = 0.0;
  std::string mode = "noise";
  std::size_t reps = 5;
  std::size_t n = 8;
  std::size_t samples = 100;
  std::size_t gt_index = 0;
  std::size_t min_span = 1;
  std::size_t ambiguity_min_span = 2;
  std::size_t group_size = 10;
  std::size_t groups = 100;
  std::size_t trials = 500;
  std::size_t max_nodes = 8;
  std::vector<std::string> score_files;
  bool inject_fault = false;

  MatchMode match_mode() const { return unlabeled ? MatchMode::unlabeled : MatchMode::labeled; }
};

std::string fixed(double value, int digits = 4) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << value;
  return os.str();
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return in;
}

std::vector<ParseTree> load_trees(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_tree_file(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::vector<BoundaryTable> load_bounds(const std::string& path, bool compact) {
  auto in = open_input(path);
  std::vector<BoundaryTable> tables;
  try {
    tables = read_boundary_file(in);
  } catch (const DataError& e) {
    throw DataError(path + ": " + e.what());
  }
  if (compact) {
    for (auto& t : tables) t = compact_silence(t);
  }
  return tables;
}

std::vector<ParseTree> project_all(const std::vector<ParseTree>& trees,
                                   const std::vector<BoundaryTable>& tables, const std::string& what) {
  if (trees.size() != tables.size()) {
    throw DataError(what + ": " + std::to_string(trees.size()) + " trees but " +
                    std::to_string(tables.size()) + " boundary blocks");
  }
  std::vector<ParseTree> out;
  out.reserve(trees.size());
  for (std::size_t k = 0; k < trees.size(); ++k) {
    try {
      out.push_back(project_to_time(trees[k], tables[k]));
    } catch (const DataError& e) {
      throw DataError(what + " sentence " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return out;
}

void check_projection_flags(const RunConfig& cfg) {
  if (cfg.even) return;
  if (cfg.gold_bounds.empty() || cfg.pred_bounds.empty()) {
    throw UsageError("give --gold-bounds and --pred-bounds, or --even");
  }
}

// Writes to --out when given, otherwise to the command's stdout.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw DataError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

void check_format(const RunConfig& cfg) {
  if (cfg.format != "tsv" && cfg.format != "json") throw UsageError("--format must be tsv or json");
}

int cmd_eval(const RunConfig& cfg, std::ostream& stdout_stream) {
  check_format(cfg);
  check_projection_flags(cfg);
  const auto gold_raw = load_trees(cfg.gold);
  const auto pred_raw = load_trees(cfg.pred);
  if (gold_raw.size() != pred_raw.size()) {
    throw DataError("gold has " + std::to_string(gold_raw.size()) + " trees but pred has " +
                    std::to_string(pred_raw.size()));
  }
  std::vector<ParseTree> gold;
  std::vector<ParseTree> pred;
  if (cfg.even) {
    for (const auto& t : gold_raw) gold.push_back(project_even(t));
    for (const auto& t : pred_raw) pred.push_back(project_even(t));
  } else {
    gold = project_all(gold_raw, load_bounds(cfg.gold_bounds, cfg.compact), "gold");
    pred = project_all(pred_raw, load_bounds(cfg.pred_bounds, cfg.compact), "pred");
  }
  const auto norm = cfg.literal_normalization ? Normalization::literal : Normalization::dice;
  const CorpusScore score = struct_iou_corpus(gold, pred, cfg.match_mode(), norm);

  Output output(cfg.out, stdout_stream);
  std::ostream& os = output.get();
  if (cfg.format == "json") {
    json doc;
    doc["sentences"] = json::array();
    for (std::size_t k = 0; k < score.per_sentence.size(); ++k) {
      const auto& s = score.per_sentence[k];
      doc["sentences"].push_back(
          {{"index", k}, {"n1", s.n1}, {"n2", s.n2}, {"objective", s.objective}, {"struct_iou", s.value}});
    }
    doc["corpus"] = {{"sentences", score.per_sentence.size()},
                     {"sentence_mean", score.sentence_mean()},
                     {"corpus", score.value}};
    os << doc.dump(2) << '\n';
  } else {
    os << "index\tn1\tn2\tobjective\tstruct_iou\n";
    for (std::size_t k = 0; k < score.per_sentence.size(); ++k) {
      const auto& s = score.per_sentence[k];
      os << k << '\t' << s.n1 << '\t' << s.n2 << '\t' << fixed(s.objective) << '\t' << fixed(s.value)
         << '\n';
    }
    os << "# sentence_mean\t" << fixed(score.sentence_mean()) << '\n';
    os << "# corpus\t" << fixed(score.value) << '\n';
  }
  return kOk;
}

int cmd_parseval(const RunConfig& cfg, std::ostream& stdout_stream) {
  check_format(cfg);
  if (cfg.min_span < 1) throw UsageError("--min-span must be >= 1");
  const auto gold = load_trees(cfg.gold);
  const auto pred = load_trees(cfg.pred);
  if (gold.size() != pred.size()) {
    throw DataError("gold has " + std::to_string(gold.size()) + " trees but pred has " +
                    std::to_string(pred.size()));
  }
  const BracketPolicy policy{cfg.min_span};
  std::vector<ParsevalScore> scores;
  for (std::size_t k = 0; k < gold.size(); ++k) {
    try {
      scores.push_back(parseval_f1(gold[k], pred[k], cfg.match_mode(), policy));
    } catch (const DataError& e) {
      throw DataError("sentence " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  const ParsevalScore micro = parseval_micro(scores);
  double mean_f1 = 0.0;
  for (const auto& s : scores) mean_f1 += s.f1;
  if (!scores.empty()) mean_f1 /= static_cast<double>(scores.size());

  Output output(cfg.out, stdout_stream);
  std::ostream& os = output.get();
  if (cfg.format == "json") {
    json doc;
    doc["sentences"] = json::array();
    for (std::size_t k = 0; k < scores.size(); ++k) {
      const auto& s = scores[k];
      doc["sentences"].push_back({{"index", k},
                                  {"precision", s.precision},
                                  {"recall", s.recall},
                                  {"f1", s.f1},
                                  {"matched", s.matched},
                                  {"gold", s.gold},
                                  {"pred", s.predicted}});
    }
    doc["corpus"] = {{"sentences", scores.size()},
                     {"sentence_mean_f1", mean_f1},
                     {"precision", micro.precision},
                     {"recall", micro.recall},
                     {"f1", micro.f1}};
    os << doc.dump(2) << '\n';
  } else {
    os << "index\tprecision\trecall\tf1\tmatched\tgold\tpred\n";
    for (std::size_t k = 0; k < scores.size(); ++k) {
      const auto& s = scores[k];
      os << k << '\t' << fixed(s.precision, 2) << '\t' << fixed(s.recall, 2) << '\t' << fixed(s.f1, 2)
         << '\t' << s.matched << '\t' << s.gold << '\t' << s.predicted << '\n';
    }
    os << "# sentence_mean_f1\t" << fixed(mean_f1, 2) << '\n';
    os << "# corpus\t" << fixed(micro.precision, 2) << '\t' << fixed(micro.recall, 2) << '\t'
       << fixed(micro.f1, 2) << '\n';
  }
  return kOk;
}

PerturbMode parse_mode(const std::string& name) {
  if (name == "noise") return PerturbMode::noise;
  if (name == "insert") return PerturbMode::insert;
  if (name == "delete") return PerturbMode::deletion;
  throw UsageError("--mode must be noise, insert or delete");
}

struct MeanStd {
  double mean = 0.0;
  double stddev = 0.0;
};

// Sample standard deviation (n - 1); zero for a single repetition.
MeanStd mean_std(const std::vector<double>& xs) {
  MeanStd r;
  for (double x : xs) r.mean += x;
  r.mean /= static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - r.mean) * (x - r.mean);
    r.stddev = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return r;
}

int cmd_perturb(const RunConfig& cfg, std::ostream& stdout_stream) {
  check_format(cfg);
  if (cfg.gold_bounds.empty()) throw UsageError("perturb needs --gold-bounds");
  if (cfg.reps == 0) throw UsageError("--reps must be >= 1");
  if (!(cfg.delta >= 0.0 && cfg.delta <= 1.0)) throw UsageError("--delta must be in [0, 1]");
  if (cfg.pred.empty() != cfg.pred_bounds.empty()) {
    throw UsageError("--pred and --pred-bounds go together");
  }
  const PerturbSpec spec{parse_mode(cfg.mode), cfg.delta, cfg.seed};

  const auto gold_raw = load_trees(cfg.gold);
  const auto gold_tables = load_bounds(cfg.gold_bounds, cfg.compact);
  const auto gold = project_all(gold_raw, gold_tables, "gold");
  std::vector<ParseTree> pred = gold;
  std::vector<BoundaryTable> pred_tables = gold_tables;
  if (!cfg.pred.empty()) {
    pred_tables = load_bounds(cfg.pred_bounds, cfg.compact);
    pred = project_all(load_trees(cfg.pred), pred_tables, "pred");
    if (pred.size() != gold.size()) {
      throw DataError("gold has " + std::to_string(gold.size()) + " trees but pred has " +
                      std::to_string(pred.size()));
    }
  }

  std::vector<double> sentence_means;
  std::vector<double> corpus_values;
  const std::uint64_t sentences = pred.size();
  for (std::size_t rep = 0; rep < cfg.reps; ++rep) {
    std::vector<ParseTree> trees;
    std::vector<BoundaryTable> tables;
    for (std::size_t k = 0; k < pred.size(); ++k) {
      try {
        auto p = perturb(pred[k], pred_tables[k], spec, rep * sentences + k);
        trees.push_back(std::move(p.tree));
        tables.push_back(std::move(p.table));
      } catch (const DataError& e) {
        throw DataError("sentence " + std::to_string(k + 1) + ": " + e.what());
      }
    }
    const CorpusScore score = struct_iou_corpus(gold, trees, cfg.match_mode());
    sentence_means.push_back(score.sentence_mean());
    corpus_values.push_back(score.value);
    if (!cfg.out.empty()) {
      std::filesystem::create_directories(cfg.out);
      const auto stem = std::filesystem::path(cfg.out) / ("rep" + std::to_string(rep));
      std::ofstream tree_file(stem.string() + ".trees");
      std::ofstream bound_file(stem.string() + ".bounds");
      if (!tree_file || !bound_file) throw DataError("cannot write to " + cfg.out);
      write_tree_file(tree_file, trees);
      write_boundary_file(bound_file, tables);
    }
  }
  const MeanStd sm = mean_std(sentence_means);
  const MeanStd cm = mean_std(corpus_values);
  if (cfg.format == "json") {
    json doc = {{"mode", cfg.mode},       {"delta", cfg.delta},      {"reps", cfg.reps},
                {"sentence_mean", sm.mean}, {"sentence_std", sm.stddev}, {"corpus_mean", cm.mean},
                {"corpus_std", cm.stddev}};
    stdout_stream << doc.dump(2) << '\n';
  } else {
    stdout_stream << "mode\tdelta\treps\tsentence_mean\tsentence_std\tcorpus_mean\tcorpus_std\n";
    stdout_stream << cfg.mode << '\t' << format_seconds(cfg.delta) << '\t' << cfg.reps << '\t'
                  << fixed(sm.mean, 6) << '\t' << fixed(sm.stddev, 6) << '\t' << fixed(cm.mean, 6) << '\t'
                  << fixed(cm.stddev, 6) << '\n';
  }
  return kOk;
}

int cmd_ambiguity(const RunConfig& cfg, std::ostream& stdout_stream) {
  check_format(cfg);
  if (cfg.ambiguity_min_span < 1) throw UsageError("--min-span must be >= 1");
  AmbiguityOptions options;
  options.n = cfg.n;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  options.gt_index = cfg.gt_index;
  options.brackets = BracketPolicy{cfg.ambiguity_min_span};
  const AmbiguityReport r = ambiguity_report(options);

  Output output(cfg.out, stdout_stream);
  std::ostream& os = output.get();
  if (cfg.format == "json") {
    json doc = {{"n", r.n},
                {"samples", r.samples},
                {"plausible", r.plausible_count},
                {"gt_index", r.gt_index},
                {"parseval_f1", {{"random_mean", r.random_parseval_mean}, {"plausible_lowest", r.plausible_parseval_min}}},
                {"struct_iou", {{"random_mean", r.random_struct_iou_mean}, {"plausible_lowest", r.plausible_struct_iou_min}}}};
    os << doc.dump(2) << '\n';
  } else {
    os << "# n\t" << r.n << "\n# samples\t" << r.samples << "\n# plausible\t" << r.plausible_count
       << "\n# gt_index\t" << r.gt_index << '\n';
    os << "metric\trandom_mean\tplausible_lowest\n";
    os << "parseval_f1\t" << fixed(r.random_parseval_mean, 2) << '\t' << fixed(r.plausible_parseval_min, 2)
       << '\n';
    os << "struct_iou\t" << fixed(r.random_struct_iou_mean, 2) << '\t' << fixed(r.plausible_struct_iou_min, 2)
       << '\n';
  }
  return kOk;
}

// Reads a per-sentence score TSV written by `eval` or `parseval`, or any
// TSV whose last column is a score. Returns one weighted score per row.
std::vector<WeightedScore> load_scores(const std::string& path) {
  auto in = open_input(path);
  std::string line;
  std::vector<std::string> header;
  std::vector<WeightedScore> rows;
  std::size_t line_no = 0;
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::istringstream is(s);
    std::string f;
    while (std::getline(is, f, '\t')) fields.push_back(f);
    return fields;
  };
  std::map<std::string, std::size_t> col;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const auto fields = split(line);
    if (header.empty()) {
      header = fields;
      for (std::size_t k = 0; k < header.size(); ++k) col[header[k]] = k;
      continue;
    }
    if (fields.size() != header.size()) throw DataError(path + ": column count mismatch", line_no);
    auto num = [&](const std::string& name) {
      try {
        return std::stod(fields[col.at(name)]);
      } catch (const std::exception&) {
        throw DataError(path + ": non-numeric field in column " + name, line_no);
      }
    };
    if (col.count("struct_iou") && col.count("n1") && col.count("n2")) {
      const double w = num("n1") + num("n2");
      rows.push_back({w * num("struct_iou"), w});
    } else if (col.count("matched") && col.count("gold") && col.count("pred")) {
      rows.push_back({200.0 * num("matched"), num("gold") + num("pred")});
    } else {
      rows.push_back({num(header.back()), 1.0});
    }
  }
  return rows;
}

int cmd_correlate(const RunConfig& cfg, std::ostream& stdout_stream, std::ostream& err) {
  check_format(cfg);
  if (cfg.score_files.size() != 2) throw UsageError("correlate takes exactly two score files");
  const auto a = load_scores(cfg.score_files[0]);
  const auto b = load_scores(cfg.score_files[1]);
  if (a.size() != b.size()) {
    throw DataError("score files have " + std::to_string(a.size()) + " and " + std::to_string(b.size()) +
                    " rows");
  }
  std::vector<SentenceRecord> records;
  for (std::size_t k = 0; k < a.size(); ++k) records.push_back({a[k], b[k]});
  const GroupedScores grouped = group_sample(records, cfg.group_size, cfg.seed, cfg.groups);
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& [x, y] : grouped.groups) {
    xs.push_back(x);
    ys.push_back(y);
  }
  const std::optional<double> rho = spearman(xs, ys);
  if (!rho) err << "warning: spearman undefined (constant group scores)\n";

  Output output(cfg.out, stdout_stream);
  std::ostream& os = output.get();
  if (cfg.format == "json") {
    json doc;
    doc["groups"] = json::array();
    for (std::size_t g = 0; g < xs.size(); ++g) doc["groups"].push_back({{"group", g}, {"a", xs[g]}, {"b", ys[g]}});
    doc["spearman"] = rho ? json(*rho) : json(nullptr);
    doc["degenerate"] = !rho.has_value();
    os << doc.dump(2) << '\n';
  } else {
    os << "group\ta\tb\n";
    for (std::size_t g = 0; g < xs.size(); ++g) os << g << '\t' << fixed(xs[g], 6) << '\t' << fixed(ys[g], 6) << '\n';
    os << "# spearman\t" << (rho ? fixed(*rho, 6) : std::string("nan")) << '\n';
    if (!rho) os << "# degenerate\n";
  }
  return kOk;
}

void write_counterexample(const std::string& dir, std::size_t trial, const ParseTree& t1,
                          const ParseTree& t2) {
  std::filesystem::create_directories(dir);
  const auto stem = std::filesystem::path(dir) / ("counterexample_" + std::to_string(trial));
  std::ofstream trees(stem.string() + ".trees");
  std::ofstream bounds(stem.string() + ".bounds");
  write_tree_file(trees, {t1, t2});
  write_boundary_file(bounds, {boundaries_of(t1), boundaries_of(t2)});
}

int cmd_oracle_check(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.trials == 0) throw UsageError("--trials must be >= 1");
  if (cfg.max_nodes == 0 || cfg.max_nodes * cfg.max_nodes > kOracleMaxPairs) {
    throw UsageError("--max-nodes must be in [1, 20]");
  }
  RandomTreeOptions options;
  options.max_nodes = cfg.max_nodes;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t def10_gap = 0;
  const std::string dir = cfg.out.empty() ? "." : cfg.out;
  for (std::size_t t = 0; t < cfg.trials; ++t) {
    Rng rng(cfg.seed, t);
    const ParseTree t1 = random_timed_tree(rng, options);
    const ParseTree t2 = random_timed_tree(rng, options);
    const MatchMode mode = t % 2 == 0 ? MatchMode::labeled : MatchMode::unlabeled;
    Alignment dp = max_weight_alignment(t1, t2, mode);
    if (cfg.inject_fault) dp.objective += 0.5;
    const Alignment oracle = oracle_alignment(t1, t2, mode, OracleVariant::order_consistent);
    const Alignment loose = oracle_alignment(t1, t2, mode, OracleVariant::def10_only);
    if (loose.objective > oracle.objective + 1e-9) ++def10_gap;

    const bool ok = std::fabs(dp.objective - oracle.objective) <= 1e-9 &&
                    feasible(IndexedTree(t1), IndexedTree(t2), dp, OracleVariant::order_consistent);
    if (ok) {
      ++passed;
    } else {
      ++failed;
      err << "mismatch in trial " << t << ": dp " << dp.objective << " oracle " << oracle.objective << '\n';
      write_counterexample(dir, t, t1, t2);
    }
  }
  out << "trials\t" << cfg.trials << "\npassed\t" << passed << "\nfailed\t" << failed
      << "\ndef10_only_exceeds\t" << def10_gap << '\n';
  return failed == 0 ? kOk : kSelfCheck;
}

void add_mode_flags(CLI::App* sub, RunConfig& cfg) {
  auto* labeled = sub->add_flag("--labeled", cfg.labeled, "match only equal labels (default)");
  auto* unlabeled = sub->add_flag("--unlabeled", cfg.unlabeled, "treat all labels as equal");
  labeled->excludes(unlabeled);
}

void add_format(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--format", cfg.format, "tsv or json")->capture_default_str();
  sub->add_option("--out", cfg.out, "output file (default stdout)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Struct-IoU: structured IoU similarity between time-aligned constituency trees"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "score predicted trees against gold trees");
  eval->add_option("--gold", cfg.gold, "gold tree file")->required();
  eval->add_option("--pred", cfg.pred, "predicted tree file")->required();
  auto* gb = eval->add_option("--gold-bounds", cfg.gold_bounds, "gold word boundary file");
  auto* pb = eval->add_option("--pred-bounds", cfg.pred_bounds, "predicted word boundary file");
  auto* even = eval->add_flag("--even", cfg.even, "place word k on (k, k+1) instead of reading boundaries");
  even->excludes(gb)->excludes(pb);
  eval->add_flag("--literal-normalization", cfg.literal_normalization,
                 "divide the matched IoU sum by n1 + n2 without the factor 2");
  eval->add_flag("--compact-silence", cfg.compact, "remove inter-word gaps before projecting");
  add_mode_flags(eval, cfg);
  add_format(eval, cfg);

  auto* pe = app.add_subcommand("parseval", "bracket precision / recall / F1 over word indices");
  pe->add_option("--gold", cfg.gold, "gold tree file")->required();
  pe->add_option("--pred", cfg.pred, "predicted tree file")->required();
  pe->add_option("--min-span", cfg.min_span, "drop brackets covering fewer words")->capture_default_str();
  add_mode_flags(pe, cfg);
  add_format(pe, cfg);

  auto* pt = app.add_subcommand("perturb", "perturb word boundaries and rescore against gold");
  pt->add_option("--gold", cfg.gold, "gold tree file")->required();
  pt->add_option("--gold-bounds", cfg.gold_bounds, "gold word boundary file")->required();
  pt->add_option("--pred", cfg.pred, "tree file to perturb (default: gold)");
  pt->add_option("--pred-bounds", cfg.pred_bounds, "boundaries of --pred");
  pt->add_option("--mode", cfg.mode, "noise, insert or delete")->capture_default_str();
  pt->add_option("--delta", cfg.delta, "perturbation level in [0, 1]")->capture_default_str();
  pt->add_option("--seed", cfg.seed)->capture_default_str();
  pt->add_option("--reps", cfg.reps, "repetitions")->capture_default_str();
  pt->add_option("--out", cfg.out, "directory for rep<k>.trees / rep<k>.bounds");
  pt->add_option("--format", cfg.format, "summary format, tsv or json")->capture_default_str();
  pt->add_flag("--compact-silence", cfg.compact, "remove inter-word gaps first");
  add_mode_flags(pt, cfg);

  auto* amb = app.add_subcommand("ambiguity", "PP-attachment ambiguity experiment on N (P N){n}");
  amb->add_option("--n", cfg.n, "number of (P N) repetitions, 1..10")->capture_default_str();
  amb->add_option("--samples", cfg.samples, "random binary trees")->capture_default_str();
  amb->add_option("--seed", cfg.seed)->capture_default_str();
  amb->add_option("--gt-index", cfg.gt_index, "which plausible tree is the ground truth")->capture_default_str();
  amb->add_option("--min-span", cfg.ambiguity_min_span, "ParsEval: drop brackets covering fewer words")
      ->capture_default_str();
  add_format(amb, cfg);

  auto* cor = app.add_subcommand(
      "correlate",
      "Spearman correlation between group-aggregated scores; groups are drawn without replacement "
      "inside a group and independently (with replacement) across groups");
  cor->add_option("files", cfg.score_files, "two per-sentence score TSVs")->required()->expected(2);
  cor->add_option("--group-size", cfg.group_size)->capture_default_str();
  cor->add_option("--groups", cfg.groups)->capture_default_str();
  cor->add_option("--seed", cfg.seed)->capture_default_str();
  add_format(cor, cfg);

  auto* oc = app.add_subcommand("oracle-check", "compare the DP against exhaustive search on random trees");
  oc->add_option("--trials", cfg.trials)->capture_default_str();
  oc->add_option("--max-nodes", cfg.max_nodes)->capture_default_str();
  oc->add_option("--seed", cfg.seed)->capture_default_str();
  oc->add_option("--out", cfg.out, "directory for counterexample files (default .)");
  oc->add_flag("--inject-fault", cfg.inject_fault)->group("");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    if (*eval) return cmd_eval(cfg, out);
    if (*pe) return cmd_parseval(cfg, out);
    if (*pt) return cmd_perturb(cfg, out);
    if (*amb) return cmd_ambiguity(cfg, out);
    if (*cor) return cmd_correlate(cfg, out, err);
    if (*oc) return cmd_oracle_check(cfg, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kData;
  }
  return kUsage;
}

}  // namespace structiou::cli
