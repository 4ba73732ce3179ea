#include "signlap/graph_io.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "signlap/error.hpp"

namespace signlap {

namespace {

bool is_skippable(const std::string& line) {
  const auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

std::size_t parse_count(const std::string& tok, std::size_t line_no) {
  std::size_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end) fail(line_no, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok, std::size_t line_no) {
  // strtod accepts a leading '+', from_chars does not.
  char* end = nullptr;
  const double v = std::strtod(tok.c_str(), &end);
  if (end != tok.c_str() + tok.size() || tok.empty()) fail(line_no, "expected a decimal, got '" + tok + "'");
  return v;
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  return in;
}

}  // namespace

SignedGraph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  bool have_header = false;
  std::vector<EdgeInput> edges;
  std::vector<std::size_t> edge_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto t = tokens(line);
    if (!have_header) {
      if (t.size() != 2) fail(line_no, "header must be 'n m'");
      n = parse_count(t[0], line_no);
      m = parse_count(t[1], line_no);
      have_header = true;
      continue;
    }
    if (t.size() != 3) fail(line_no, "edge line must be 'i j w', got " + std::to_string(t.size()) + " fields");
    if (edges.size() == m) fail(line_no, "more edge lines than the declared " + std::to_string(m));
    edges.push_back({parse_count(t[0], line_no), parse_count(t[1], line_no), parse_real(t[2], line_no)});
    edge_lines.push_back(line_no);
  }
  if (!have_header) fail(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    fail(line_no, "declared " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  try {
    return build_graph(n, edges);
  } catch (const Error& e) {
    // Re-label validation failures with the file position of the edge.
    const std::string& what = e.detail();
    const auto hash = what.find("edge #");
    if (hash != std::string::npos) {
      const std::size_t k = std::stoul(what.substr(hash + 6)) - 1;
      if (k < edge_lines.size()) throw Error(e.code(), "line " + std::to_string(edge_lines[k]) + ": " + what);
    }
    throw;
  }
}

SignedGraph read_edge_list_file(const std::string& path) {
  auto in = open(path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const SignedGraph& g) {
  const auto old = out.precision(std::numeric_limits<double>::max_digits10);
  out << g.node_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << ' ' << e.weight << '\n';
  out.precision(old);
}

std::vector<double> read_vector(std::istream& in, std::size_t expected) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    const auto t = tokens(line);
    if (t.size() != 1) fail(line_no, "expected one value per line");
    out.push_back(parse_real(t[0], line_no));
  }
  if (expected != 0 && out.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(expected) + " values, found " + std::to_string(out.size()));
  }
  return out;
}

std::vector<double> read_vector_file(const std::string& path, std::size_t expected) {
  auto in = open(path);
  return read_vector(in, expected);
}

}  // namespace signlap
