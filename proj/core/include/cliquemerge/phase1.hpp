#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "cliquemerge/graph.hpp"

namespace cliquemerge {

/// The 3-cliques a node belongs to, in canonical form.
struct TriangleTable {
  NodeId owner = 0;
  std::set<Clique> triangles;

  bool operator==(const TriangleTable&) const = default;
};

/// neighbors(v) ∩ neighbors(n).
std::vector<NodeId> mutual_neighbors(const Graph& g, NodeId v, NodeId n);

struct Introductions {
  TriangleTable table;
  /// {v, n} for every neighbor n that shares no neighbor with v.
  std::vector<Clique> two_cliques;
  /// Adjacency probes made while hearing the neighbors' advertisements.
  std::uint64_t probes = 0;
};

/// Runs neighbor introductions from v's point of view: every neighbor n
/// advertises the other neighbors of v, and v keeps those it is itself
/// adjacent to. A neighbor with no mutual neighbor forms a maximal 2-clique.
Introductions introductions_for(const Graph& g, NodeId v);

struct Phase1Options {
  /// Emit a singleton clique for every isolated node.
  bool include_singletons = true;
  /// Worker threads; 0 or 1 runs serially.
  unsigned workers = 1;
};

struct Phase1Result {
  std::vector<TriangleTable> tables;  // indexed by NodeId
  CliqueSet early_cliques;
  /// early cliques discovered by each node, in discovery order
  std::vector<std::vector<Clique>> early_per_node;
  std::uint64_t probes = 0;
};

Phase1Result run_phase1(const Graph& g, const Phase1Options& opts = {});

}  // namespace cliquemerge
