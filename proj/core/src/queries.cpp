#include "cliquemerge/queries.hpp"

#include <stdexcept>

#include "cliquemerge/phase1.hpp"

namespace cliquemerge {

namespace {

void track_largest(std::optional<Clique>& largest, const Clique& c) {
  if (!largest || larger_clique(c, *largest)) largest = c;
}

}  // namespace

CalcResult do_calculation(const Graph& g, const CalcOptions& opts) {
  CalcResult out;
  const std::size_t n = g.node_count();

  Phase1Result p1 = run_phase1(g, {.include_singletons = opts.include_singletons, .workers = opts.workers});
  out.counters.phase1 = p1.probes;
  out.per_node = std::move(p1.early_per_node);
  out.all_cliques = std::move(p1.early_cliques);
  for (const Clique& c : out.all_cliques) track_largest(out.largest, c);

  const auto& brk = opts.merge.break_at_size;
  if (brk && out.largest && out.largest->size() >= *brk) {
    // A phase-1 clique already answers the question.
    for (const Clique& c : out.all_cliques) {
      if (c.size() >= *brk) {
        out.break_witness = c;
        break;
      }
    }
    return out;
  }

  Phase2Result p2 = run_phase2(g, p1.tables, {.merge = opts.merge, .workers = opts.workers});
  out.counters.phase2 = p2.comparisons;
  out.break_witness = std::move(p2.break_witness);
  for (NodeId v = 0; v < n; ++v) {
    for (Clique& c : p2.per_node[v]) {
      track_largest(out.largest, c);
      out.all_cliques.insert(c);
      out.per_node[v].push_back(std::move(c));
    }
  }
  return out;
}

const Clique& largest_found_clique(const CalcResult& r) {
  if (!r.largest) throw std::logic_error("no cliques");
  return *r.largest;
}

Decision has_clique_of_size(const Graph& g, std::size_t k, CalcOptions opts) {
  if (k < 1) throw std::invalid_argument("clique size k must be >= 1");
  opts.merge.break_at_size = k;
  CalcResult r = do_calculation(g, opts);
  Decision d;
  if (r.break_witness && r.break_witness->size() >= k && is_clique(g, *r.break_witness)) {
    d.found = true;
    d.witness = std::move(r.break_witness);
  }
  return d;
}

std::string per_node_report(const CalcResult& r, std::span<const std::string> names) {
  std::string out;
  for (NodeId v = 0; v < r.per_node.size(); ++v) {
    out += v < names.size() ? names[v] : std::to_string(v);
    out += ':';
    for (const Clique& c : r.per_node[v]) {
      out += ' ';
      out += format_clique(c, names);
    }
    out += '\n';
  }
  return out;
}

}  // namespace cliquemerge
