#include "cliquemerge/phase2.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

#include "parallel.hpp"

namespace cliquemerge {

namespace {

bool pair_less(const NodePair& p, NodeId lo, NodeId hi) {
  return p.lo < lo || (p.lo == lo && p.hi < hi);
}

// Index of {a, b} in pl.pairs, or pairs.size() when absent.
std::size_t find_pair(const PairList& pl, NodeId a, NodeId b) {
  if (a == b) return pl.pairs.size();
  const NodeId lo = std::min(a, b);
  const NodeId hi = std::max(a, b);
  auto it = std::lower_bound(pl.pairs.begin(), pl.pairs.end(), lo,
                             [hi](const NodePair& p, NodeId l) { return pair_less(p, l, hi); });
  if (it == pl.pairs.end() || it->lo != lo || it->hi != hi) return pl.pairs.size();
  return static_cast<std::size_t>(it - pl.pairs.begin());
}

// One run seeded by pairs[seed] around key. Returns the member list
// (without the owner).
std::vector<NodeId> merge_run(PairList& pl, std::size_t seed, NodeId key, std::uint64_t& comparisons) {
  const NodePair& p = pl.pairs[seed];
  std::vector<NodeId> members{p.lo, p.hi};
  for (std::size_t j = 0; j < pl.pairs.size(); ++j) {
    if (j == seed) continue;
    ++comparisons;
    NodePair& pp = pl.pairs[j];
    if (!pp.contains(key)) continue;
    const NodeId s = pp.other(key);
    if (std::find(members.begin(), members.end(), s) != members.end()) continue;
    bool all_paired = true;
    for (NodeId m : members) {
      ++comparisons;
      if (!paired_in_list(pl, s, m)) {
        all_paired = false;
        break;
      }
    }
    if (!all_paired) continue;
    for (NodeId m : members) pl.pairs[find_pair(pl, s, m)].merged = true;
    pp.merged = true;
    members.push_back(s);
  }
  return members;
}

}  // namespace

PairList build_pair_list(NodeId v, const TriangleTable& table) {
  if (table.owner != v) throw std::invalid_argument("triangle table belongs to another node");
  PairList pl;
  pl.owner = v;
  pl.pairs.reserve(table.triangles.size());
  for (const Clique& t : table.triangles) {
    if (t.size() != 3 || !t.contains(v)) {
      throw std::invalid_argument("triangle " + format_clique(t) + " does not contain node " +
                                  std::to_string(v));
    }
    NodePair p;
    bool first = true;
    for (NodeId m : t.members()) {
      if (m == v) continue;
      (first ? p.lo : p.hi) = m;
      first = false;
    }
    pl.pairs.push_back(p);
  }
  // Triangles are sorted and all contain v, so the pairs already are too,
  // but sorting here keeps the invariant independent of that.
  std::sort(pl.pairs.begin(), pl.pairs.end(),
            [](const NodePair& a, const NodePair& b) { return pair_less(a, b.lo, b.hi); });
  return pl;
}

bool paired_in_list(const PairList& pl, NodeId a, NodeId b) {
  return find_pair(pl, a, b) != pl.pairs.size();
}

MergeOutcome merge_cliques_for_node(NodeId v, PairList& pl, const MergeOptions& opts) {
  if (pl.owner != v) throw std::invalid_argument("pair list belongs to another node");
  if (opts.break_at_size && *opts.break_at_size == 0) {
    throw std::invalid_argument("break_at_size must be >= 1");
  }
  for (const auto& p : pl.pairs) {
    if (p.merged) throw std::invalid_argument("pair list has pairs already marked merged");
  }

  MergeOutcome out;
  auto emit = [&](std::vector<NodeId> members) {
    members.push_back(v);
    Clique c(std::move(members));
    if (opts.break_at_size && c.size() >= *opts.break_at_size) {
      out.stopped = true;
      out.witness = c;
    }
    // Both-key runs on one seed can land on the same clique.
    if (opts.key_node != KeyNodeStrategy::Both ||
        std::find(out.cliques.begin(), out.cliques.end(), c) == out.cliques.end()) {
      out.cliques.push_back(std::move(c));
    }
  };

  for (std::size_t i = 0; i < pl.pairs.size() && !out.stopped; ++i) {
    if (pl.pairs[i].merged) continue;
    const NodePair seed = pl.pairs[i];
    switch (opts.key_node) {
      case KeyNodeStrategy::FirstOfPair:
        emit(merge_run(pl, i, seed.lo, out.comparisons));
        break;
      case KeyNodeStrategy::SecondOfPair:
        emit(merge_run(pl, i, seed.hi, out.comparisons));
        break;
      case KeyNodeStrategy::Both:
        emit(merge_run(pl, i, seed.lo, out.comparisons));
        if (!out.stopped) emit(merge_run(pl, i, seed.hi, out.comparisons));
        break;
    }
    pl.pairs[i].merged = true;
  }
  return out;
}

Phase2Result run_phase2(const Graph& g, const std::vector<TriangleTable>& tables,
                        const Phase2Options& opts) {
  const std::size_t n = g.node_count();
  if (tables.size() != n) throw std::invalid_argument("one triangle table per node is required");

  Phase2Result out;
  out.per_node.resize(n);
  std::vector<std::uint64_t> comparisons(n, 0);

  if (opts.workers <= 1) {
    for (NodeId v = 0; v < n; ++v) {
      PairList pl = build_pair_list(v, tables[v]);
      MergeOutcome r = merge_cliques_for_node(v, pl, opts.merge);
      out.comparisons += r.comparisons;
      out.per_node[v] = std::move(r.cliques);
      if (r.stopped) {
        out.break_witness = r.witness;
        break;
      }
    }
    return out;
  }

  std::atomic<bool> cancel{false};
  std::mutex witness_mu;
  detail::for_each_node(n, opts.workers, [&](NodeId v) {
    if (cancel.load(std::memory_order_relaxed)) return;
    PairList pl = build_pair_list(v, tables[v]);
    MergeOutcome r = merge_cliques_for_node(v, pl, opts.merge);
    comparisons[v] = r.comparisons;
    out.per_node[v] = std::move(r.cliques);
    if (r.stopped) {
      std::lock_guard lock(witness_mu);
      if (!out.break_witness) out.break_witness = r.witness;
      cancel.store(true, std::memory_order_relaxed);
    }
  });
  for (auto c : comparisons) out.comparisons += c;
  return out;
}

}  // namespace cliquemerge
