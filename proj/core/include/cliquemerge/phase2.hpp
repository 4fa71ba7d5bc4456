#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <vector>

#include "cliquemerge/graph.hpp"
#include "cliquemerge/phase1.hpp"

namespace cliquemerge {

struct NodePair {
  NodeId lo = 0;
  NodeId hi = 0;
  bool merged = false;

  bool contains(NodeId v) const { return v == lo || v == hi; }
  NodeId other(NodeId v) const { return v == lo ? hi : lo; }
};

/// The neighbor pairs {a, b} of owner such that {owner, a, b} is a
/// triangle, sorted ascending by (lo, hi).
struct PairList {
  NodeId owner = 0;
  std::vector<NodePair> pairs;
};

enum class KeyNodeStrategy { FirstOfPair, SecondOfPair, Both };

struct MergeOptions {
  KeyNodeStrategy key_node = KeyNodeStrategy::FirstOfPair;
  /// Stop as soon as a clique of at least this size is emitted.
  std::optional<std::size_t> break_at_size;
};

/// Throws std::invalid_argument if a triangle does not contain v.
PairList build_pair_list(NodeId v, const TriangleTable& table);

/// Whether {a, b} is in the list, merged or not.
bool paired_in_list(const PairList& pl, NodeId a, NodeId b);

struct MergeOutcome {
  std::vector<Clique> cliques;  // emission order
  std::uint64_t comparisons = 0;
  bool stopped = false;  // break_at_size was reached
  std::optional<Clique> witness;
};

/// Merges pairs around key nodes. Every unmerged pair, in list order, seeds
/// a run: the seed's nodes start the member list, and each other pair
/// holding the key node contributes its other node s when s is paired with
/// every current member. Merging marks the contributing pairs so they seed
/// no further runs; marked pairs still count for membership checks.
///
/// pl is updated in place. Throws std::invalid_argument if pl.owner != v or
/// any pair is already marked.
MergeOutcome merge_cliques_for_node(NodeId v, PairList& pl, const MergeOptions& opts = {});

struct Phase2Options {
  MergeOptions merge;
  unsigned workers = 1;
};

struct Phase2Result {
  std::vector<std::vector<Clique>> per_node;  // indexed by NodeId
  std::uint64_t comparisons = 0;
  /// First clique that met break_at_size. Serial runs pick the one from the
  /// lowest node; parallel runs pick whichever worker got there.
  std::optional<Clique> break_witness;
};

Phase2Result run_phase2(const Graph& g, const std::vector<TriangleTable>& tables,
                        const Phase2Options& opts = {});

}  // namespace cliquemerge
