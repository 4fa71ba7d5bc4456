#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliquemerge/graph.hpp"
#include "cliquemerge/phase2.hpp"

namespace cliquemerge {

struct CalcOptions {
  MergeOptions merge;
  /// Report a singleton clique for every isolated node.
  bool include_singletons = true;
  unsigned workers = 1;
};

struct OpCounters {
  std::uint64_t phase1 = 0;  // adjacency probes
  std::uint64_t phase2 = 0;  // pair comparisons and membership lookups

  bool operator==(const OpCounters&) const = default;
};

struct CalcResult {
  CliqueSet all_cliques;
  /// Largest clique found; ties go to the lexicographically smallest.
  std::optional<Clique> largest;
  /// Cliques found by each node: its phase-1 cliques, then its merged ones,
  /// each in emission order.
  std::vector<std::vector<Clique>> per_node;
  OpCounters counters;
  /// Set when merge.break_at_size stopped the calculation early.
  std::optional<Clique> break_witness;
};

/// Runs both phases over every node and collects the unique cliques.
CalcResult do_calculation(const Graph& g, const CalcOptions& opts = {});

/// Throws std::logic_error("no cliques") when nothing was found.
const Clique& largest_found_clique(const CalcResult& r);

struct Decision {
  bool found = false;
  std::optional<Clique> witness;
};

/// Runs the calculation with break_at_size = k. A witness is always a
/// verified clique of size >= k. A negative answer only means the
/// algorithm emitted no such clique; it is not a proof of absence.
Decision has_clique_of_size(const Graph& g, std::size_t k, CalcOptions opts = {});

/// One line per node, "<name>: [..] [..]", in ascending id order.
std::string per_node_report(const CalcResult& r, std::span<const std::string> names = {});

}  // namespace cliquemerge
