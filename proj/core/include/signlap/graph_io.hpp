#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "signlap/graph.hpp"

namespace signlap {

/// Edge-list text format: first non-comment line `n m`, then m lines `i j w`
/// with 1-based nodes. Lines whose first non-blank character is `#` and blank
/// lines are skipped. Errors are ParseError with the 1-based line number.
SignedGraph read_edge_list(std::istream& in);
SignedGraph read_edge_list_file(const std::string& path);

/// Writes `n m` and one `i j w` line per edge, weights with 17 significant digits.
void write_edge_list(std::ostream& out, const SignedGraph& g);

/// One decimal per line, comments and blank lines skipped. When `expected` is
/// nonzero the count must match.
std::vector<double> read_vector(std::istream& in, std::size_t expected = 0);
std::vector<double> read_vector_file(const std::string& path, std::size_t expected = 0);

}  // namespace signlap
