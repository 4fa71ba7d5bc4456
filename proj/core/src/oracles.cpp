#include "cliquemerge/oracles.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace cliquemerge {

namespace {

// Fixed-width bitset sized at runtime; enough for BK's set algebra.
class VertexSet {
 public:
  explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] |= o.words_[i];
    return r;
  }

  std::size_t count_and(const VertexSet& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }

  VertexSet minus(const VertexSet& o) const {
    VertexSet r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        fn(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct BronKerbosch {
  const std::vector<VertexSet>& adj;
  CliqueSet& out;
  std::vector<NodeId> r;

  void expand(VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.insert(Clique(r));
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    (p | x).for_each([&](std::size_t u) {
      std::size_t c = adj[u].count_and(p);
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    });
    VertexSet candidates = p.minus(adj[pivot]);
    candidates.for_each([&](std::size_t v) {
      r.push_back(static_cast<NodeId>(v));
      expand(p & adj[v], x & adj[v]);
      r.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

}  // namespace

CliqueSet brute_force_maximal_cliques(const Graph& g, const OracleLimits& limits) {
  if (limits.brute_force_max_nodes > OracleLimits::kBruteForceHardCap) {
    throw std::invalid_argument("brute-force limit exceeds hard cap of " +
                                std::to_string(OracleLimits::kBruteForceHardCap));
  }
  const std::size_t n = g.node_count();
  if (n > limits.brute_force_max_nodes) {
    throw GraphTooLarge("graph has " + std::to_string(n) + " nodes; brute force is limited to " +
                        std::to_string(limits.brute_force_max_nodes));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = 0; b < n; ++b)
      if (a != b && g.are_adjacent(a, b)) adj[a] |= std::uint32_t{1} << b;

  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  CliqueSet out;
  for (std::uint32_t s = 1; s <= all && all != 0; ++s) {
    // common = vertices adjacent to every member of s
    std::uint32_t common = all;
    bool clique = true;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const std::uint32_t others = s & ~(std::uint32_t{1} << v);
      if ((others & ~adj[v]) != 0) {
        clique = false;
        break;
      }
      common &= adj[v];
    }
    if (!clique || (common & ~s) != 0) continue;
    std::vector<NodeId> members;
    for (std::uint32_t bits = s; bits; bits &= bits - 1) members.push_back(std::countr_zero(bits));
    out.insert(Clique(std::move(members)));
  }
  return out;
}

CliqueSet bron_kerbosch_pivot(const Graph& g) {
  const std::size_t n = g.node_count();
  CliqueSet out;
  if (n == 0) return out;
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (NodeId v = 0; v < n; ++v)
    for (NodeId u : g.neighbors(v)) adj[v].set(u);
  VertexSet p(n);
  for (std::size_t v = 0; v < n; ++v) p.set(v);
  BronKerbosch bk{adj, out, {}};
  bk.expand(p, VertexSet(n));
  return out;
}

std::size_t max_clique_size_oracle(const Graph& g) {
  std::size_t best = 0;
  for (const Clique& c : bron_kerbosch_pivot(g)) best = std::max(best, c.size());
  return best;
}

std::set<Clique> triangles_oracle(const Graph& g, NodeId v) {
  const NodeId n = static_cast<NodeId>(g.node_count());
  if (v >= n) throw std::out_of_range("node id " + std::to_string(v) + " out of range");
  std::set<Clique> out;
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        if (a != v && b != v && c != v) continue;
        if (g.are_adjacent(a, b) && g.are_adjacent(a, c) && g.are_adjacent(b, c)) out.insert(Clique{a, b, c});
      }
    }
  }
  return out;
}

}  // namespace cliquemerge
