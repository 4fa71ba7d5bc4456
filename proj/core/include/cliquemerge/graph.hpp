#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cliquemerge {

/// Dense node index, assigned in creation order starting at 0.
using NodeId = std::uint32_t;

/// Undirected simple graph. Nodes are created with add_node() and never
/// removed; adjacency lists are kept sorted so that lookups are
/// logarithmic and iteration order is deterministic.
///
/// The graph is mutable while it is being built. Calculations take it by
/// const reference and every const member is safe to call concurrently.
class Graph {
 public:
  Graph() = default;

  NodeId add_node();

  /// Connects a and b. Repeating an existing edge is a no-op.
  /// Throws std::invalid_argument on a self-loop and std::out_of_range on
  /// an unknown id.
  void connect(NodeId a, NodeId b);

  /// Adds k fresh nodes and connects every pair among them.
  std::vector<NodeId> new_complete_subgraph(std::size_t k);

  std::span<const NodeId> neighbors(NodeId v) const;
  bool are_adjacent(NodeId a, NodeId b) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  /// All edges as (lo, hi) with lo < hi, in ascending order.
  std::vector<std::pair<NodeId, NodeId>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  void check_id(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph new_graph() { return Graph{}; }

/// A vertex set in canonical (strictly ascending) order. Construction
/// sorts its input, so two cliques compare equal iff their member sets do.
/// Whether the members are actually pairwise adjacent is a property of a
/// graph, checked with is_clique().
class Clique {
 public:
  Clique() = default;
  Clique(std::initializer_list<NodeId> members);
  explicit Clique(std::vector<NodeId> members);

  std::span<const NodeId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(NodeId v) const;

  auto operator<=>(const Clique&) const = default;
  bool operator==(const Clique&) const = default;

 private:
  std::vector<NodeId> members_;
};

using CliqueSet = std::set<Clique>;

/// Orders by size descending, then lexicographically ascending. The first
/// clique under this order is the one reported as "largest".
bool larger_clique(const Clique& a, const Clique& b);

bool is_clique(const Graph& g, const Clique& c);

/// True when no vertex outside c is adjacent to every member of c.
bool is_maximal(const Graph& g, const Clique& c);

/// Formats a clique as "[A,B,C]" using names[id] when names covers every
/// member, else the numeric ids.
std::string format_clique(const Clique& c, std::span<const std::string> names = {});

}  // namespace cliquemerge
