#include "cliquemerge/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>

namespace cliquemerge {

ParseError::ParseError(ParseDiagnostic d)
    : std::runtime_error("line " + std::to_string(d.line) + ": " + d.message), diag_(std::move(d)) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

// Splits text into whitespace-separated tokens per line, skipping blank lines.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
      if (i > start) l.tokens.push_back(line.substr(start, i - start));
    }
    if (!l.tokens.empty()) out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] void fail(std::size_t line, std::string message) { throw ParseError({line, std::move(message)}); }

long long to_integer(const Line& l, std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    fail(l.number, "expected an integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

ParsedGraph parse_dimacs_edge(std::string_view text, const DimacsOptions& opts) {
  ParsedGraph out;
  bool have_header = false;
  std::size_t header_line = 0;
  long long declared_edges = 0;
  long long n = 0;
  for (const Line& l : tokenize(text)) {
    const std::string_view kind = l.tokens[0];
    if (kind == "c") continue;
    if (kind == "p") {
      if (have_header) fail(l.number, "duplicate problem line");
      if (l.tokens.size() != 4 || l.tokens[1] != "edge") fail(l.number, "expected 'p edge <n> <m>'");
      n = to_integer(l, l.tokens[2]);
      declared_edges = to_integer(l, l.tokens[3]);
      if (n < 0 || declared_edges < 0) fail(l.number, "negative count in problem line");
      if (n > UINT32_MAX) fail(l.number, "vertex count exceeds 32-bit ids");
      for (long long i = 0; i < n; ++i) out.graph.add_node();
      have_header = true;
      header_line = l.number;
      continue;
    }
    if (kind == "e") {
      if (!have_header) fail(l.number, "edge line before 'p edge' header");
      if (l.tokens.size() != 3) fail(l.number, "expected 'e <u> <v>'");
      const long long u = to_integer(l, l.tokens[1]);
      const long long v = to_integer(l, l.tokens[2]);
      for (long long x : {u, v}) {
        if (x < 1 || x > n) fail(l.number, "vertex " + std::to_string(x) + " out of range 1.." + std::to_string(n));
      }
      if (u == v) fail(l.number, "self-loop on vertex " + std::to_string(u));
      const auto a = static_cast<NodeId>(u - 1);
      const auto b = static_cast<NodeId>(v - 1);
      if (out.graph.are_adjacent(a, b)) {
        if (opts.strict) fail(l.number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        continue;
      }
      out.graph.connect(a, b);
      continue;
    }
    fail(l.number, "unrecognized line type '" + std::string(kind) + "'");
  }
  if (!have_header) fail(1, "missing 'p edge' header");
  if (static_cast<long long>(out.graph.edge_count()) != declared_edges) {
    ParseDiagnostic d{header_line, "header declares " + std::to_string(declared_edges) + " edges, found " +
                                       std::to_string(out.graph.edge_count()) + " distinct"};
    if (opts.strict) throw ParseError(std::move(d));
    out.warnings.push_back(std::move(d));
  }
  return out;
}

std::string write_dimacs_edge(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.node_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [a, b] : g.edges()) {
    out += "e ";
    out += std::to_string(a + 1);
    out += ' ';
    out += std::to_string(b + 1);
    out += '\n';
  }
  return out;
}

ParsedCnf parse_dimacs_cnf(std::string_view text) {
  ParsedCnf out;
  bool have_header = false;
  std::size_t header_line = 0;
  long long declared_clauses = 0;
  for (const Line& l : tokenize(text)) {
    const std::string_view first = l.tokens[0];
    if (first == "c") continue;
    if (first[0] == '%') break;
    if (first == "p") {
      if (have_header) fail(l.number, "duplicate problem line");
      if (l.tokens.size() != 4 || l.tokens[1] != "cnf") fail(l.number, "expected 'p cnf <vars> <clauses>'");
      const long long vars = to_integer(l, l.tokens[2]);
      declared_clauses = to_integer(l, l.tokens[3]);
      if (vars < 0 || declared_clauses < 0 || vars > UINT32_MAX) fail(l.number, "bad count in problem line");
      out.formula.variable_count = static_cast<std::uint32_t>(vars);
      have_header = true;
      header_line = l.number;
      continue;
    }
    if (!have_header) fail(l.number, "clause before 'p cnf' header");
    if (to_integer(l, l.tokens.back()) != 0) fail(l.number, "clause is missing its terminating 0");
    const std::size_t arity = l.tokens.size() - 1;
    if (arity != 3) fail(l.number, "clause has " + std::to_string(arity) + " literals; exactly 3 are required");
    Clause c;
    for (std::size_t i = 0; i < 3; ++i) {
      const long long lit = to_integer(l, l.tokens[i]);
      if (lit == 0) fail(l.number, "0 inside a clause");
      const long long var = lit < 0 ? -lit : lit;
      if (var > out.formula.variable_count) {
        fail(l.number, "variable " + std::to_string(var) + " exceeds declared count " +
                           std::to_string(out.formula.variable_count));
      }
      c[i] = Literal{static_cast<std::uint32_t>(var), lit < 0};
    }
    out.formula.clauses.push_back(c);
  }
  if (!have_header) fail(1, "missing 'p cnf' header");
  if (static_cast<long long>(out.formula.clauses.size()) != declared_clauses) {
    out.warnings.push_back({header_line, "header declares " + std::to_string(declared_clauses) +
                                             " clauses, found " + std::to_string(out.formula.clauses.size())});
  }
  return out;
}

std::string write_dimacs_cnf(const CnfFormula& f) {
  std::ostringstream os;
  os << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const Clause& c : f.clauses) {
    for (const Literal& l : c) os << (l.negated ? "-" : "") << l.variable << ' ';
    os << "0\n";
  }
  return os.str();
}

}  // namespace cliquemerge
