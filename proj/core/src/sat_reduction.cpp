#include "cliquemerge/sat_reduction.hpp"

#include <stdexcept>
#include <string>

#include "cliquemerge/generators.hpp"
#include "cliquemerge/oracles.hpp"

namespace cliquemerge {

void CnfFormula::validate() const {
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    for (const Literal& l : clauses[i]) {
      if (l.variable < 1 || l.variable > variable_count) {
        throw std::invalid_argument("clause " + std::to_string(i + 1) + " uses variable " +
                                    std::to_string(l.variable) + " outside 1.." + std::to_string(variable_count));
      }
    }
  }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
  for (const Clause& c : clauses) {
    bool sat = false;
    for (const Literal& l : c) sat = sat || (assignment.at(l.variable) != l.negated);
    if (!sat) return false;
  }
  return true;
}

ReductionResult reduce_3sat(const CnfFormula& f) {
  f.validate();
  ReductionResult out;
  out.clause_count = f.clauses.size();
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (const Literal& l : f.clauses[i]) {
      out.graph.add_node();
      out.node_origin.push_back({i, l});
    }
  }
  const auto n = static_cast<NodeId>(out.node_origin.size());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      const auto& x = out.node_origin[a];
      const auto& y = out.node_origin[b];
      if (x.clause != y.clause && !x.literal.complements(y.literal)) out.graph.connect(a, b);
    }
  }
  return out;
}

bool decide_satisfiable(const CnfFormula& f, SatSolver solver, const CalcOptions& opts) {
  ReductionResult r = reduce_3sat(f);
  if (r.clause_count == 0) return true;
  if (solver == SatSolver::Oracle) {
    if (r.graph.node_count() > kOracleSolverMaxNodes) {
      throw std::length_error("oracle solver is limited to " + std::to_string(kOracleSolverMaxNodes) +
                              " reduction nodes");
    }
    return max_clique_size_oracle(r.graph) == r.clause_count;
  }
  return has_clique_of_size(r.graph, r.clause_count, opts).found;
}

bool truth_table_oracle(const CnfFormula& f) {
  f.validate();
  if (f.variable_count > kTruthTableMaxVariables) {
    throw std::length_error("truth table is limited to " + std::to_string(kTruthTableMaxVariables) + " variables");
  }
  std::vector<bool> assignment(f.variable_count + 1, false);
  const std::uint64_t total = std::uint64_t{1} << f.variable_count;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::uint32_t v = 1; v <= f.variable_count; ++v) assignment[v] = (bits >> (v - 1)) & 1;
    if (f.satisfied_by(assignment)) return true;
  }
  return false;
}

CnfFormula random_3cnf(std::uint32_t variables, std::size_t clauses, std::uint64_t seed) {
  if (variables == 0 && clauses > 0) throw std::invalid_argument("clauses need at least one variable");
  CnfFormula f;
  f.variable_count = variables;
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < clauses; ++i) {
    Clause c;
    for (Literal& l : c) {
      l.variable = static_cast<std::uint32_t>(1 + rng.next() % variables);
      l.negated = (rng.next() & 1) != 0;
    }
    f.clauses.push_back(c);
  }
  return f;
}

}  // namespace cliquemerge
