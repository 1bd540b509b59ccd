#include "tppforge/io.hpp"

#include <fstream>
#include <sstream>

namespace tppforge {

namespace {

struct Line {
  int number = 0;
  std::string text;
};

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw ParseError(origin + ":" + std::to_string(line) + ": " + msg);
}

bool is_comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == ' ' || ch == '\t' || ch == '\r') continue;
    return ch == '#';
  }
  return true;
}

// Content lines (numbered) with comments and blanks stripped.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!is_comment_or_blank(line)) out.push_back({number, line});
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<long long> parse_integers(const std::string& origin, const Line& line) {
  std::vector<long long> out;
  std::istringstream in(line.text);
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      fail(origin, line.number, "invalid integer '" + token + "'");
    }
  }
  return out;
}

ElementSet parse_set_line(const std::string& origin, const Line& line, int group_order) {
  std::vector<long long> values = parse_integers(origin, line);
  if (values.empty()) fail(origin, line.number, "set must be nonempty");
  ElementSet set(group_order);
  for (long long v : values) {
    if (v < 0 || v >= group_order)
      fail(origin, line.number,
           "element index " + std::to_string(v) + " out of range for group of order " +
               std::to_string(group_order));
    set.insert(static_cast<int>(v));
  }
  return set;
}

}  // namespace

ElementSet parse_set_literal(const std::string& text, int group_order) {
  return parse_set_line("<string>", Line{1, text}, group_order);
}

std::string set_literal(const ElementSet& set) {
  std::string out;
  set.for_each([&](int e) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  });
  return out;
}

TppTriple parse_triple_text(const std::string& text, const Group& group,
                            const std::string& origin) {
  std::vector<Line> lines = content_lines(text);
  if (lines.size() != 3)
    throw ParseError(origin + ": expected 3 set lines (S, T, U), found " +
                     std::to_string(lines.size()));
  ElementSet s = parse_set_line(origin, lines[0], group.order());
  ElementSet t = parse_set_line(origin, lines[1], group.order());
  ElementSet u = parse_set_line(origin, lines[2], group.order());
  return TppTriple(group, std::move(s), std::move(t), std::move(u));
}

TppTriple read_triple_file(const std::string& path, const Group& group) {
  return parse_triple_text(slurp(path), group, path);
}

std::string triple_file_text(const TppTriple& triple) {
  return set_literal(triple.s()) + "\n" + set_literal(triple.t()) + "\n" +
         set_literal(triple.u()) + "\n";
}

CayleyTableData read_cayley_table_file(const std::string& path) {
  std::vector<Line> lines = content_lines(slurp(path));
  if (lines.empty()) throw ParseError(path + ": empty Cayley table file");

  std::vector<long long> head = parse_integers(path, lines[0]);
  if (head.size() != 1)
    fail(path, lines[0].number, "expected a single group order on the first line");
  long long n = head[0];
  if (n < 1 || n > kMaxGroupOrder)
    fail(path, lines[0].number,
         "group order " + std::to_string(n) + " out of supported range 1.." +
             std::to_string(kMaxGroupOrder));
  if (static_cast<long long>(lines.size()) != n + 1)
    throw ParseError(path + ": expected " + std::to_string(n) + " table rows, found " +
                     std::to_string(lines.size() - 1));

  CayleyTableData data;
  data.order = static_cast<int>(n);
  data.table.reserve(static_cast<std::size_t>(n) * n);
  for (long long row = 0; row < n; ++row) {
    const Line& line = lines[static_cast<std::size_t>(row) + 1];
    std::vector<long long> values = parse_integers(path, line);
    if (static_cast<long long>(values.size()) != n)
      fail(path, line.number,
           "expected " + std::to_string(n) + " entries in row " + std::to_string(row) +
               ", found " + std::to_string(values.size()));
    for (long long v : values) {
      if (v < 0 || v >= n)
        fail(path, line.number,
             "entry " + std::to_string(v) + " out of range 0.." + std::to_string(n - 1));
      data.table.push_back(static_cast<int>(v));
    }
  }
  return data;
}

IndexedMatrix parse_matrix_text(const std::string& text, const std::string& origin) {
  std::vector<Line> lines = content_lines(text);
  if (lines.size() < 3)
    throw ParseError(origin + ": matrix file needs a size line, two label lines and " +
                     "the entry rows");

  std::vector<long long> size = parse_integers(origin, lines[0]);
  if (size.size() != 2 || size[0] < 1 || size[1] < 1)
    fail(origin, lines[0].number, "expected 'rows cols' with positive counts");
  int rows = static_cast<int>(size[0]);
  int cols = static_cast<int>(size[1]);

  auto parse_labels = [&](const Line& line, int expected, const char* what) {
    std::vector<long long> values = parse_integers(origin, line);
    if (static_cast<int>(values.size()) != expected)
      fail(origin, line.number,
           "expected " + std::to_string(expected) + " " + what + " labels, found " +
               std::to_string(values.size()));
    std::vector<int> labels;
    labels.reserve(values.size());
    for (long long v : values) {
      if (v < 0 || v > kMaxGroupOrder)
        fail(origin, line.number, "label " + std::to_string(v) + " out of range");
      labels.push_back(static_cast<int>(v));
    }
    return labels;
  };
  std::vector<int> row_labels = parse_labels(lines[1], rows, "row");
  std::vector<int> col_labels = parse_labels(lines[2], cols, "column");

  if (static_cast<int>(lines.size()) != 3 + rows)
    throw ParseError(origin + ": expected " + std::to_string(rows) +
                     " entry rows, found " + std::to_string(lines.size() - 3));

  IndexedMatrix m(std::move(row_labels), std::move(col_labels));
  for (int i = 0; i < rows; ++i) {
    const Line& line = lines[static_cast<std::size_t>(i) + 3];
    std::vector<long long> values = parse_integers(origin, line);
    if (static_cast<int>(values.size()) != cols)
      fail(origin, line.number,
           "expected " + std::to_string(cols) + " entries, found " +
               std::to_string(values.size()));
    for (int j = 0; j < cols; ++j) m.at(i, j) = values[j];
  }
  return m;
}

IndexedMatrix read_matrix_file(const std::string& path) {
  return parse_matrix_text(slurp(path), path);
}

std::string matrix_file_text(const IndexedMatrix& matrix) {
  std::ostringstream out;
  out << matrix.rows() << ' ' << matrix.cols() << '\n';
  for (int i = 0; i < matrix.rows(); ++i)
    out << matrix.row_labels()[i] << (i + 1 == matrix.rows() ? "\n" : " ");
  for (int j = 0; j < matrix.cols(); ++j)
    out << matrix.col_labels()[j] << (j + 1 == matrix.cols() ? "\n" : " ");
  for (int i = 0; i < matrix.rows(); ++i)
    for (int j = 0; j < matrix.cols(); ++j)
      out << matrix.at(i, j) << (j + 1 == matrix.cols() ? "\n" : " ");
  return out.str();
}

}  // namespace tppforge
