#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemerge/generators.hpp"
#include "cliquemerge/graph.hpp"
#include "cliquemerge/queries.hpp"

namespace cliquemerge {

/// One graph, the two-phase algorithm against Bron–Kerbosch.
struct AuditRecord {
  std::string descriptor;  // generator spec or "file:<path>"
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t paper_clique_count = 0;
  std::size_t oracle_clique_count = 0;
  std::size_t soundness_violations = 0;    // emitted sets that are not cliques
  std::size_t maximality_violations = 0;   // emitted cliques that are not maximal
  std::size_t missed_cliques = 0;          // |oracle \ emitted|
  std::size_t spurious_cliques = 0;        // |emitted \ oracle|
  std::size_t paper_max_size = 0;
  std::size_t oracle_max_size = 0;
  std::uint64_t phase1_ops = 0;
  std::uint64_t phase2_ops = 0;
  std::chrono::nanoseconds paper_time{0};
  std::chrono::nanoseconds oracle_time{0};

  /// The count identities that must hold for any record.
  bool consistent() const;
};

struct AuditOptions {
  CalcOptions calc;
  std::size_t oracle_max_nodes = 128;
};

/// Throws GraphTooLarge when g exceeds opts.oracle_max_nodes.
AuditRecord audit_graph(const Graph& g, std::string descriptor, const AuditOptions& opts = {});

/// Greedily deletes vertices while keep(subgraph) stays true. Returns a
/// graph on which keep holds and from which no single vertex can be removed
/// without breaking it.
Graph shrink_graph(const Graph& g, const std::function<bool(const Graph&)>& keep);

/// The subgraph induced by keep[v] == true, relabelled densely.
Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep);

// Campaign config is a flat "key = value" file; '#' starts a comment.
//
//   fixtures            = fig3a, fig4a
//   complete            = 3, 5
//   moon_moser          = 1, 2, 3, 4          (k values)
//   gnp.trials          = 200
//   gnp.sizes           = 4-12                (range or list)
//   gnp.p               = 0.3, 0.5, 0.7
//   gnp.seed            = 1
//   generator           = planted_clique:n=15,k=5,p=0.25,seed=42   (repeatable)
//   file                = instance.dimacs    (repeatable)
//   csv / json          = output paths
//   reproducer_dir      = where soundness/maximality counterexamples go
//   witness             = path for the smallest missed-clique witness
//   key_strategy        = first | second | both
//   include_singletons  = true | false
//   oracle_max_nodes    = 128
//   timings             = false               (times make reports non-reproducible)
//   workers             = 1
//
// Instances run in the order: fixtures, complete, moon_moser, gnp, generator,
// file.
struct CampaignConfig {
  std::vector<GeneratorSpec> generators;
  std::vector<std::string> files;
  std::string csv_path;
  std::string json_path;
  std::string reproducer_dir;
  std::string witness_path;
  AuditOptions audit;
  bool timings = false;
  unsigned workers = 1;
};

/// Throws std::invalid_argument naming the offending line.
CampaignConfig parse_campaign_config(std::string_view text);

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t soundness_violations = 0;
  std::size_t maximality_violations = 0;
  std::size_t missed_cliques = 0;
  std::size_t spurious_cliques = 0;
  std::size_t complete_instances = 0;      // missed == 0
  std::size_t max_size_agreements = 0;     // paper_max == oracle_max
  /// Smallest instance (by n, then m) that missed a maximal clique.
  std::optional<std::string> divergence_descriptor;
  /// That instance shrunk by vertex deletion while it still misses one.
  std::optional<Graph> divergence_witness;
};

struct CampaignReport {
  std::vector<AuditRecord> records;  // config order
  CampaignSummary summary;
  std::vector<std::string> reproducers;  // files written for violations
};

/// Audits every instance, then writes the CSV/JSON/reproducer/witness files
/// named in the config. Throws std::runtime_error on an unwritable path.
CampaignReport run_audit_campaign(const CampaignConfig& config);

// Columns: descriptor,n,m,paper_cliques,oracle_cliques,soundness_violations,
// maximality_violations,missed_cliques,spurious_cliques,paper_max_size,
// oracle_max_size,phase1_ops,phase2_ops[,paper_time_ns,oracle_time_ns]
std::string format_audit_csv(std::span<const AuditRecord> records, bool timings);
std::string format_audit_json(const CampaignReport& report, bool timings);

enum class ScalingFamily { Complete, Gnp, MoonMoser };

struct ScalingOptions {
  CalcOptions calc;
  double p = 0.5;           // gnp only
  std::uint64_t seed = 1;   // gnp only
};

struct ScalingRecord {
  std::size_t n = 0;
  std::uint64_t phase1_ops = 0;
  std::uint64_t phase2_ops = 0;
  std::chrono::nanoseconds wall_time{0};
};

struct ScalingReport {
  std::vector<ScalingRecord> records;
  /// Least-squares slope of log(ops) against log(n); empty with fewer than
  /// three sizes or when a counter is zero.
  std::optional<double> phase1_slope;
  std::optional<double> phase2_slope;
};

/// sizes are node counts, except for moon_moser where they are group counts
/// k (n = 3k). They must be strictly ascending.
ScalingReport run_scaling(ScalingFamily family, std::span<const std::size_t> sizes,
                          const ScalingOptions& opts = {});

/// Throws std::invalid_argument with fewer than three points; empty when a
/// value is not positive.
std::optional<double> fit_loglog_slope(std::span<const double> xs, std::span<const double> ys);

std::string format_scaling_csv(const ScalingReport& report);

ScalingFamily parse_scaling_family(std::string_view name);
KeyNodeStrategy parse_key_strategy(std::string_view name);

}  // namespace cliquemerge
