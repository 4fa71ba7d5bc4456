#pragma once

#include <cstdint>
#include <vector>

#include "cliquemerge/cnf.hpp"
#include "cliquemerge/graph.hpp"
#include "cliquemerge/queries.hpp"

namespace cliquemerge {

struct LiteralOccurrence {
  std::size_t clause = 0;
  Literal literal;
};

struct ReductionResult {
  Graph graph;
  /// node_origin[v] is the clause position node v stands for.
  std::vector<LiteralOccurrence> node_origin;
  std::size_t clause_count = 0;
};

/// Karp's 3SAT to clique reduction: one node per literal occurrence, in
/// clause-then-position order, and an edge between occurrences in distinct
/// clauses unless they are complementary. The formula is satisfiable iff
/// the graph has a clique of size clause_count.
ReductionResult reduce_3sat(const CnfFormula& f);

enum class SatSolver { TwoPhase, Oracle };

/// Largest reduction graph the oracle solver accepts (20 clauses).
inline constexpr std::size_t kOracleSolverMaxNodes = 60;

/// TwoPhase: has_clique_of_size(k = clause count). Oracle: Bron–Kerbosch
/// maximum clique size. Throws std::length_error when the oracle solver is
/// asked for a graph larger than kOracleSolverMaxNodes.
bool decide_satisfiable(const CnfFormula& f, SatSolver solver, const CalcOptions& opts = {});

inline constexpr std::uint32_t kTruthTableMaxVariables = 20;

/// Tries every assignment. Throws std::length_error past
/// kTruthTableMaxVariables.
bool truth_table_oracle(const CnfFormula& f);

/// Uniform random 3-CNF: each literal draws its variable as
/// 1 + next() % variables, then its sign from the low bit of next().
CnfFormula random_3cnf(std::uint32_t variables, std::size_t clauses, std::uint64_t seed);

}  // namespace cliquemerge
