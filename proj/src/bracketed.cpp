#include "structiou/bracketed.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>
#include <utility>

#include "structiou/error.hpp"

namespace structiou {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  TreeNode parse_root() {
    skip_space();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    TreeNode root = parse_node();
    skip_space();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError("trailing characters after tree", pos_);
    }
    // PTB files often wrap each tree as `( (S ...) )`.
    while (root.label.empty() && root.children.size() == 1) {
      TreeNode inner = std::move(root.children.front());
      root = std::move(inner);
    }
    if (root.label.empty()) throw ParseError("missing root label", 0);
    return root;
  }

 private:
  TreeNode parse_node() {
    const std::size_t open = pos_;
    if (pos_ >= text_.size() || text_[pos_] != '(') throw ParseError("expected '('", pos_);
    ++pos_;
    skip_space();
    TreeNode node;
    if (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')') {
      node.label = std::string(read_atom());
    }
    skip_space();
    std::optional<std::string> word;
    while (true) {
      if (pos_ >= text_.size()) throw ParseError("unbalanced '(' opened", open);
      const char c = text_[pos_];
      if (c == ')') {
        ++pos_;
        break;
      }
      if (c == '(') {
        if (word) throw ParseError("word mixed with constituents", pos_);
        node.children.push_back(parse_node());
      } else {
        const std::size_t at = pos_;
        std::string_view atom = read_atom();
        if (word) throw ParseError("preterminal with multiple words", at);
        if (!node.children.empty()) throw ParseError("word mixed with constituents", at);
        word = std::string(atom);
      }
      skip_space();
    }
    if (node.children.empty() && !word) throw ParseError("empty constituent", open);
    if (word) {
      if (node.label.empty()) throw ParseError("preterminal without label", open);
      node.word = std::move(word);
      node.interval = OpenInterval(static_cast<double>(next_word_),
                                   static_cast<double>(next_word_ + 1));
      ++next_word_;
    } else {
      node.interval = OpenInterval(node.children.front().interval.start(),
                                   node.children.back().interval.end());
    }
    return node;
  }

  std::string_view read_atom() {
    const std::size_t begin = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(begin, pos_ - begin);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t next_word_ = 0;
};

void serialize(const TreeNode& node, std::string& out) {
  out += '(';
  out += node.label;
  if (node.is_terminal()) {
    out += ' ';
    out += node.word ? *node.word : std::string("<W>");
  } else {
    for (const auto& child : node.children) {
      out += ' ';
      serialize(child, out);
    }
  }
  out += ')';
}

bool skippable(std::string_view line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ParseTree parse_bracketed(std::string_view text) { return ParseTree(Parser(text).parse_root()); }

std::string serialize_bracketed(const ParseTree& tree) {
  std::string out;
  serialize(tree.root(), out);
  return out;
}

std::vector<ParseTree> read_tree_file(std::istream& in) {
  std::vector<ParseTree> trees;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    try {
      trees.push_back(parse_bracketed(line));
    } catch (const ParseError& e) {
      throw DataError(std::string("malformed tree: ") + e.what(), line_no);
    }
  }
  return trees;
}

void write_tree_file(std::ostream& out, const std::vector<ParseTree>& trees) {
  for (const auto& tree : trees) out << serialize_bracketed(tree) << '\n';
}

}  // namespace structiou
