#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemerge/cnf.hpp"
#include "cliquemerge/graph.hpp"

namespace cliquemerge {

struct ParseDiagnostic {
  std::size_t line = 1;  // 1-based
  std::string message;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(ParseDiagnostic d);
  const ParseDiagnostic& diagnostic() const { return diag_; }

 private:
  ParseDiagnostic diag_;
};

struct DimacsOptions {
  /// Treat duplicate edges and a header edge-count mismatch as errors.
  bool strict = false;
};

struct ParsedGraph {
  Graph graph;
  std::vector<ParseDiagnostic> warnings;
};

// DIMACS edge format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-based)
ParsedGraph parse_dimacs_edge(std::string_view text, const DimacsOptions& opts = {});

/// Header, then one "e" line per edge in ascending (lo, hi) order.
std::string write_dimacs_edge(const Graph& g);

struct ParsedCnf {
  CnfFormula formula;
  std::vector<ParseDiagnostic> warnings;
};

// DIMACS CNF restricted to 3 literals per clause, one clause per line,
// each terminated by 0. A line starting with '%' ends the input.
ParsedCnf parse_dimacs_cnf(std::string_view text);

std::string write_dimacs_cnf(const CnfFormula& f);

}  // namespace cliquemerge
