#pragma once

#include <string>
#include <vector>

#include "tppforge/element_set.hpp"
#include "tppforge/realize.hpp"
#include "tppforge/tpp.hpp"

namespace tppforge {

// Text formats. Lines whose first non-blank character is '#' are comments
// in every file format; blank lines are skipped. Parse failures raise
// ParseError with "<file>:<line>: ..." messages.

// Set literal: whitespace-separated element indices on one line.
ElementSet parse_set_literal(const std::string& text, int group_order);
std::string set_literal(const ElementSet& set);

// Triple file: exactly three set-literal lines, in the order S, T, U.
TppTriple read_triple_file(const std::string& path, const Group& group);
TppTriple parse_triple_text(const std::string& text, const Group& group,
                            const std::string& origin = "<string>");
std::string triple_file_text(const TppTriple& triple);

// Cayley table file: first value line holds the order n, then n lines of
// n entries each (row g lists g*0, g*1, ..., g*(n-1)).
struct CayleyTableData {
  int order = 0;
  std::vector<int> table;
};
CayleyTableData read_cayley_table_file(const std::string& path);

// Matrix file: a "rows cols" line, the row-label line, the column-label
// line, then `rows` lines of `cols` integers.
IndexedMatrix read_matrix_file(const std::string& path);
IndexedMatrix parse_matrix_text(const std::string& text,
                                const std::string& origin = "<string>");
std::string matrix_file_text(const IndexedMatrix& matrix);

}  // namespace tppforge
