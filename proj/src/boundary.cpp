#include "structiou/boundary.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

#include "structiou/error.hpp"

namespace structiou {

namespace {

double parse_seconds(const std::string& field, std::size_t line_no) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw DataError("non-numeric time field '" + field + "'", line_no);
  }
  return value;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

bool BoundaryTable::gap_free() const noexcept {
  for (std::size_t k = 1; k < rows.size(); ++k) {
    if (rows[k - 1].end != rows[k].start) return false;
  }
  return true;
}

void check_boundaries(const BoundaryTable& table, std::size_t first_line) {
  if (table.rows.empty()) throw DataError("empty boundary block", first_line);
  for (std::size_t k = 0; k < table.rows.size(); ++k) {
    const auto& row = table.rows[k];
    const std::size_t line = first_line == 0 ? 0 : first_line + k;
    if (!(row.start < row.end)) throw DataError("start >= end", line);
    if (k > 0 && row.start < table.rows[k - 1].end) {
      throw DataError("overlapping boundary rows", line);
    }
  }
}

std::vector<BoundaryTable> read_boundary_file(std::istream& in) {
  std::vector<BoundaryTable> tables;
  BoundaryTable current;
  std::size_t block_start = 0;
  std::size_t blank_run = 0;
  std::size_t line_no = 0;
  std::string line;

  auto flush = [&] {
    if (!current.rows.empty()) {
      check_boundaries(current, block_start);
      tables.push_back(std::move(current));
      current = BoundaryTable{};
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) {
      flush();
      ++blank_run;
      continue;
    }
    // Two separators in a row delimit an empty block (leading/trailing runs are fine).
    if (blank_run >= 2 && !tables.empty()) throw DataError("empty boundary block", line_no - 1);
    blank_run = 0;
    if (current.rows.empty()) block_start = line_no;
    std::istringstream fields(line);
    std::string word;
    std::string start;
    std::string end;
    std::string extra;
    if (!(fields >> word >> start >> end) || (fields >> extra)) {
      throw DataError("expected 'word start end'", line_no);
    }
    current.rows.push_back({word, parse_seconds(start, line_no), parse_seconds(end, line_no)});
  }
  flush();
  return tables;
}

std::string format_seconds(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

void write_boundary_file(std::ostream& out, const std::vector<BoundaryTable>& tables) {
  for (std::size_t t = 0; t < tables.size(); ++t) {
    if (t > 0) out << '\n';
    for (const auto& row : tables[t].rows) {
      out << row.word << '\t' << format_seconds(row.start) << '\t' << format_seconds(row.end)
          << '\n';
    }
  }
}

BoundaryTable compact_silence(const BoundaryTable& table) {
  BoundaryTable out = table;
  for (std::size_t k = 1; k < out.rows.size(); ++k) {
    const double duration = table.rows[k].end - table.rows[k].start;
    out.rows[k].start = out.rows[k - 1].end;
    out.rows[k].end = out.rows[k].start + duration;
  }
  return out;
}

}  // namespace structiou
