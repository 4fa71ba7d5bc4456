#include "cliquemerge/phase1.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

#include "parallel.hpp"

namespace cliquemerge {

std::vector<NodeId> mutual_neighbors(const Graph& g, NodeId v, NodeId n) {
  if (v == n) throw std::invalid_argument("mutual_neighbors needs two distinct nodes");
  auto a = g.neighbors(v);
  auto b = g.neighbors(n);
  std::vector<NodeId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Introductions introductions_for(const Graph& g, NodeId v) {
  Introductions out;
  out.table.owner = v;
  auto nbrs = g.neighbors(v);
  // Neighbor n advertises v's other neighbors to v's table; the count of
  // accepted advertisements resets per (v, n).
  for (NodeId n : nbrs) {
    std::size_t mutual = 0;
    for (NodeId nn : nbrs) {
      if (nn == n) continue;
      ++out.probes;
      if (g.are_adjacent(n, nn)) {
        ++mutual;
        out.table.triangles.insert(Clique{v, n, nn});
      }
    }
    if (mutual == 0) out.two_cliques.push_back(Clique{v, n});
  }
  return out;
}

Phase1Result run_phase1(const Graph& g, const Phase1Options& opts) {
  const std::size_t n = g.node_count();
  std::vector<Introductions> per_node(n);
  detail::for_each_node(n, opts.workers, [&](NodeId v) { per_node[v] = introductions_for(g, v); });

  Phase1Result out;
  out.tables.reserve(n);
  out.early_per_node.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    auto& intro = per_node[v];
    out.probes += intro.probes;
    if (opts.include_singletons && g.degree(v) == 0) {
      out.early_per_node[v].push_back(Clique{v});
    }
    for (auto& c : intro.two_cliques) out.early_per_node[v].push_back(c);
    for (const auto& c : out.early_per_node[v]) out.early_cliques.insert(c);
    out.tables.push_back(std::move(intro.table));
  }
  return out;
}

}  // namespace cliquemerge
