#include <doctest.h>

#include "cliquemerge/graph_io.hpp"
#include "test_support.hpp"

using namespace cliquemerge;

namespace {

std::size_t error_line(std::string_view text, const DimacsOptions& opts = {}) {
  try {
    parse_dimacs_edge(text, opts);
  } catch (const ParseError& e) {
    return e.diagnostic().line;
  }
  return 0;
}

std::size_t cnf_error_line(std::string_view text) {
  try {
    parse_dimacs_cnf(text);
  } catch (const ParseError& e) {
    return e.diagnostic().line;
  }
  return 0;
}

}  // namespace

TEST_CASE("write K3 byte-exact") {
  CHECK(write_dimacs_edge(testing::complete(3)) == "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
  CHECK(write_dimacs_edge(Graph{}) == "p edge 0 0\n");
}

TEST_CASE("parse a small file with comments and blank lines") {
  ParsedGraph p = parse_dimacs_edge("c a triangle\n\np edge 4 3\ne 1 2\r\ne 2 3\n  e 3 1\n");
  CHECK(p.warnings.empty());
  CHECK(p.graph.node_count() == 4);
  CHECK(p.graph.edge_count() == 3);
  CHECK(p.graph.are_adjacent(0, 2));
  CHECK(p.graph.degree(3) == 0);
}

TEST_CASE("round trips") {
  Graph g3 = testing::fig3a();
  ParsedGraph back = parse_dimacs_edge(write_dimacs_edge(g3));
  CHECK(back.graph == g3);
  CHECK(back.warnings.empty());

  for (const Graph& g : testing::gnp_corpus(50, 4000)) {
    const std::string text = write_dimacs_edge(g);
    ParsedGraph p = parse_dimacs_edge(text, {.strict = true});
    CHECK(p.graph == g);
    CHECK(write_dimacs_edge(p.graph) == text);
  }
}

TEST_CASE("edge-format errors carry the line number") {
  CHECK(error_line("e 1 2\n") == 1);
  CHECK(error_line("c only comments\n") == 1);
  CHECK(error_line("p edge 3 1\ne 1 4\n") == 2);
  CHECK(error_line("p edge 3 1\ne 0 1\n") == 2);
  CHECK(error_line("p edge 3 1\n\ne 2 2\n") == 3);
  CHECK(error_line("p edge 3 1\ne 1\n") == 2);
  CHECK(error_line("p edge 3 1\ne 1 x\n") == 2);
  CHECK(error_line("p edge 3 1\nx 1 2\n") == 2);
  CHECK(error_line("p edge 3 1\np edge 3 1\n") == 2);
  CHECK(error_line("p col 3 1\n") == 1);
  CHECK(error_line("p edge -3 1\n") == 1);
}

TEST_CASE("duplicate edges and count mismatches") {
  const char* dup = "p edge 3 2\ne 1 2\ne 2 1\ne 2 3\n";
  ParsedGraph lenient = parse_dimacs_edge(dup);
  CHECK(lenient.graph.edge_count() == 2);
  CHECK(lenient.warnings.empty());
  CHECK(error_line(dup, {.strict = true}) == 3);

  const char* short_header = "c\np edge 3 5\ne 1 2\n";
  ParsedGraph w = parse_dimacs_edge(short_header);
  REQUIRE(w.warnings.size() == 1);
  CHECK(w.warnings[0].line == 2);
  CHECK(error_line(short_header, {.strict = true}) == 2);
}

TEST_CASE("cnf parse and write") {
  ParsedCnf p = parse_dimacs_cnf("c two clauses\np cnf 3 2\n1 2 3 0\n-1 2 -3 0\n%\n0\n");
  CHECK(p.warnings.empty());
  CHECK(p.formula.variable_count == 3);
  REQUIRE(p.formula.clauses.size() == 2);
  CHECK(p.formula.clauses[1][0] == Literal{1, true});
  CHECK(p.formula.clauses[1][2] == Literal{3, true});
  CHECK(write_dimacs_cnf(p.formula) == "p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n");
  CHECK(parse_dimacs_cnf(write_dimacs_cnf(p.formula)).formula == p.formula);

  ParsedCnf mismatch = parse_dimacs_cnf("p cnf 2 3\n1 2 1 0\n");
  REQUIRE(mismatch.warnings.size() == 1);
  CHECK(mismatch.warnings[0].line == 1);
}

TEST_CASE("cnf errors") {
  CHECK(cnf_error_line("1 2 3 0\n") == 1);
  CHECK(cnf_error_line("") == 1);
  CHECK(cnf_error_line("p cnf 3 1\n1 2 0\n") == 2);
  CHECK(cnf_error_line("p cnf 3 1\n1 2 3 -1 0\n") == 2);
  CHECK(cnf_error_line("p cnf 3 1\n1 2 3\n") == 2);
  CHECK(cnf_error_line("p cnf 3 1\n1 0 3 0\n") == 2);
  CHECK(cnf_error_line("p cnf 3 1\n1 2 4 0\n") == 2);
  CHECK(cnf_error_line("p cnf 3 1\n\n1 a 3 0\n") == 3);
  CHECK(cnf_error_line("p edge 3 1\n") == 1);
}
