#include "cliquemerge/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace cliquemerge {

NodeId Graph::add_node() {
  adjacency_.emplace_back();
  return static_cast<NodeId>(adjacency_.size() - 1);
}

void Graph::check_id(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw std::out_of_range("node id " + std::to_string(v) + " out of range (node count " +
                            std::to_string(adjacency_.size()) + ")");
  }
}

void Graph::connect(NodeId a, NodeId b) {
  check_id(a);
  check_id(b);
  if (a == b) {
    throw std::invalid_argument("self-loop on node " + std::to_string(a));
  }
  auto& na = adjacency_[a];
  auto it = std::lower_bound(na.begin(), na.end(), b);
  if (it != na.end() && *it == b) return;
  na.insert(it, b);
  auto& nb = adjacency_[b];
  nb.insert(std::lower_bound(nb.begin(), nb.end(), a), a);
  ++edge_count_;
}

std::vector<NodeId> Graph::new_complete_subgraph(std::size_t k) {
  if (k == 0) throw std::invalid_argument("complete subgraph size must be >= 1");
  std::vector<NodeId> ids;
  ids.reserve(k);
  for (std::size_t i = 0; i < k; ++i) ids.push_back(add_node());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) connect(ids[i], ids[j]);
  return ids;
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_id(v);
  return adjacency_[v];
}

bool Graph::are_adjacent(NodeId a, NodeId b) const {
  check_id(a);
  check_id(b);
  const auto& na = adjacency_[a];
  return std::binary_search(na.begin(), na.end(), b);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
  std::vector<std::pair<NodeId, NodeId>> out;
  out.reserve(edge_count_);
  for (NodeId v = 0; v < adjacency_.size(); ++v)
    for (NodeId u : adjacency_[v])
      if (v < u) out.emplace_back(v, u);
  return out;
}

Clique::Clique(std::initializer_list<NodeId> members)
    : Clique(std::vector<NodeId>(members)) {}

Clique::Clique(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end()) {
    throw std::invalid_argument("clique has a repeated member");
  }
}

bool Clique::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool larger_clique(const Clique& a, const Clique& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a < b;
}

bool is_clique(const Graph& g, const Clique& c) {
  auto m = c.members();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= g.node_count()) return false;
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (m[j] >= g.node_count() || !g.are_adjacent(m[i], m[j])) return false;
  }
  return true;
}

bool is_maximal(const Graph& g, const Clique& c) {
  if (c.size() == 0) return g.node_count() == 0;
  // Any extension vertex must be a neighbor of the first member.
  for (NodeId cand : g.neighbors(c.members()[0])) {
    if (c.contains(cand)) continue;
    bool all = true;
    for (NodeId m : c.members()) {
      if (!g.are_adjacent(cand, m)) {
        all = false;
        break;
      }
    }
    if (all) return false;
  }
  return true;
}

std::string format_clique(const Clique& c, std::span<const std::string> names) {
  bool named = !names.empty();
  for (NodeId v : c.members())
    if (v >= names.size()) named = false;
  std::string out = "[";
  bool first = true;
  for (NodeId v : c.members()) {
    if (!first) out += ',';
    first = false;
    out += named ? names[v] : std::to_string(v);
  }
  out += ']';
  return out;
}

}  // namespace cliquemerge
