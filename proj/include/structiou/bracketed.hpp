#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "structiou/tree.hpp"

namespace structiou {

/// Parse one bracketed tree such as `(NP (PRP Your) (NN turn))`. Word k
/// (0-based) receives the provisional interval (k, k+1). A label-less outer
/// wrapper `( (S ...) )` is stripped. Throws ParseError.
ParseTree parse_bracketed(std::string_view text);

/// Single-space normalized bracketed form; wordless terminals print `<W>`.
std::string serialize_bracketed(const ParseTree& tree);

/// One tree per line; blank lines and lines starting with `#` are skipped.
/// Throws DataError carrying the 1-based line number.
std::vector<ParseTree> read_tree_file(std::istream& in);

void write_tree_file(std::ostream& out, const std::vector<ParseTree>& trees);

}  // namespace structiou
