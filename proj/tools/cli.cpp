#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquemerge/audit.hpp"
#include "cliquemerge/generators.hpp"
#include "cliquemerge/graph_io.hpp"
#include "cliquemerge/oracles.hpp"
#include "cliquemerge/queries.hpp"
#include "cliquemerge/sat_reduction.hpp"

namespace cliquemerge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << content) || !f.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

nlohmann::json clique_json(const Clique& c) {
  return nlohmann::json(std::vector<NodeId>(c.members().begin(), c.members().end()));
}

struct SolveArgs {
  std::string input;
  std::string gen;
  std::string algo = "paper";
  std::optional<std::size_t> k;
  bool list_maximal = false;
  bool per_node = false;
  std::string format = "text";
  std::string key = "first";
  bool no_singletons = false;
  unsigned workers = 1;
};

int solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  if (a.input.empty() == a.gen.empty()) throw UsageError("solve needs exactly one of --input or --gen");
  if (a.k && a.list_maximal) throw UsageError("--k (decision mode) and --list-maximal are contradictory");
  if (a.per_node && a.algo != "paper") throw UsageError("--per-node is only available with --algo paper");
  if (a.k && *a.k < 1) throw UsageError("--k must be >= 1");

  Graph g;
  std::vector<std::string> names;
  if (!a.gen.empty()) {
    GeneratedGraph gg = generate(parse_generator_spec(a.gen));
    g = std::move(gg.graph);
    names = std::move(gg.names);
  } else {
    ParsedGraph pg = parse_dimacs_edge(read_file(a.input));
    for (const auto& w : pg.warnings) err << "warning: " << a.input << ":" << w.line << ": " << w.message << '\n';
    g = std::move(pg.graph);
  }

  CalcOptions calc;
  calc.merge.key_node = parse_key_strategy(a.key);
  calc.include_singletons = !a.no_singletons;
  calc.workers = a.workers;

  const bool json = a.format == "json";
  nlohmann::json doc{{"algo", a.algo}, {"nodes", g.node_count()}, {"edges", g.edge_count()}};
  auto name = [&](const Clique& c) { return format_clique(c, names); };

  if (a.k) {
    Decision d;
    if (a.algo == "paper") {
      d = has_clique_of_size(g, *a.k, calc);
    } else {
      const CliqueSet all = a.algo == "bk" ? bron_kerbosch_pivot(g) : brute_force_maximal_cliques(g);
      for (const Clique& c : all) {
        if (c.size() >= *a.k && (!d.witness || larger_clique(c, *d.witness))) d.witness = c;
      }
      d.found = d.witness.has_value();
    }
    if (json) {
      doc["decision"] = {{"k", *a.k}, {"found", d.found}};
      if (d.witness) doc["decision"]["witness"] = clique_json(*d.witness);
      out << doc.dump(2) << '\n';
    } else {
      out << (d.found ? "YES" : "NO");
      if (d.witness) out << ' ' << name(*d.witness);
      out << '\n';
    }
    return d.found ? kExitOk : kExitNegative;
  }

  CliqueSet all;
  std::optional<Clique> largest;
  std::optional<CalcResult> two_phase;
  if (a.algo == "paper") {
    two_phase = do_calculation(g, calc);
    all = two_phase->all_cliques;
    largest = two_phase->largest;
  } else {
    all = a.algo == "bk" ? bron_kerbosch_pivot(g) : brute_force_maximal_cliques(g);
    for (const Clique& c : all)
      if (!largest || larger_clique(c, *largest)) largest = c;
  }

  if (json) {
    doc["clique_count"] = all.size();
    doc["largest"] = largest ? clique_json(*largest) : nlohmann::json(nullptr);
    if (a.list_maximal) {
      doc["cliques"] = nlohmann::json::array();
      for (const Clique& c : all) doc["cliques"].push_back(clique_json(c));
    }
    if (two_phase) doc["counters"] = {{"phase1", two_phase->counters.phase1}, {"phase2", two_phase->counters.phase2}};
    if (a.per_node) {
      nlohmann::json per = nlohmann::json::array();
      for (const auto& cs : two_phase->per_node) {
        nlohmann::json row = nlohmann::json::array();
        for (const Clique& c : cs) row.push_back(clique_json(c));
        per.push_back(std::move(row));
      }
      doc["per_node"] = std::move(per);
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }

  out << "nodes " << g.node_count() << " edges " << g.edge_count() << '\n';
  out << "maximal cliques " << all.size() << '\n';
  if (largest) out << "largest " << name(*largest) << " size " << largest->size() << '\n';
  if (two_phase) out << "ops phase1 " << two_phase->counters.phase1 << " phase2 " << two_phase->counters.phase2 << '\n';
  if (a.list_maximal) {
    for (const Clique& c : all) out << name(c) << '\n';
  }
  if (a.per_node) out << per_node_report(*two_phase, names);
  return kExitOk;
}

int audit(const std::string& config_path, const std::string& csv, const std::string& json, std::ostream& out) {
  CampaignConfig cfg = parse_campaign_config(read_file(config_path));
  if (!csv.empty()) cfg.csv_path = csv;
  if (!json.empty()) cfg.json_path = json;
  const CampaignReport report = run_audit_campaign(cfg);
  const CampaignSummary& s = report.summary;
  out << "instances " << s.instances << '\n'
      << "soundness_violations " << s.soundness_violations << '\n'
      << "maximality_violations " << s.maximality_violations << '\n'
      << "missed_cliques " << s.missed_cliques << '\n'
      << "spurious_cliques " << s.spurious_cliques << '\n'
      << "complete_instances " << s.complete_instances << '\n'
      << "max_size_agreements " << s.max_size_agreements << '\n';
  if (s.divergence_descriptor) {
    out << "divergence_instance " << *s.divergence_descriptor << '\n'
        << "divergence_witness_nodes " << s.divergence_witness->node_count() << '\n';
  }
  for (const auto& r : report.reproducers) out << "reproducer " << r << '\n';
  return s.soundness_violations + s.maximality_violations == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-phase clique calculation with reference oracles and audit tooling", "cliquemerge"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Find maximal cliques or decide whether a k-clique exists");
  auto* in_opt = solve_cmd->add_option("--input", solve_args.input, "DIMACS edge file");
  auto* gen_opt = solve_cmd->add_option("--gen", solve_args.gen, "Generator spec, e.g. fig4a or gnp:n=20,p=0.5,seed=1");
  in_opt->excludes(gen_opt);
  solve_cmd->add_option("--algo", solve_args.algo, "paper, bk or brute")
      ->check(CLI::IsMember({"paper", "bk", "brute"}));
  solve_cmd->add_option("--k", solve_args.k, "Decision mode: exit 0 if a clique of size >= k is found, else 1");
  solve_cmd->add_flag("--list-maximal", solve_args.list_maximal, "Print every maximal clique found");
  solve_cmd->add_flag("--per-node", solve_args.per_node, "Print the cliques each node found");
  solve_cmd->add_option("--format", solve_args.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_option("--key", solve_args.key, "Key node strategy: first, second or both")
      ->check(CLI::IsMember({"first", "second", "both"}));
  solve_cmd->add_flag("--no-singletons", solve_args.no_singletons, "Do not report isolated nodes as cliques");
  solve_cmd->add_option("--workers", solve_args.workers, "Worker threads")->check(CLI::PositiveNumber);

  std::string gen_spec, gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph as DIMACS");
  gen_cmd->add_option("spec", gen_spec, "Generator spec")->required();
  gen_cmd->add_option("-o,--output", gen_out, "Output file (default stdout)");

  std::string audit_config, audit_csv, audit_json;
  auto* audit_cmd = app.add_subcommand("audit", "Run an audit campaign against the oracles");
  audit_cmd->add_option("--config", audit_config, "Campaign config file")->required();
  audit_cmd->add_option("--csv", audit_csv, "Override the CSV output path");
  audit_cmd->add_option("--json", audit_json, "Override the JSON output path");

  std::string scale_family = "complete", scale_out;
  std::vector<std::size_t> scale_sizes;
  ScalingOptions scale_opts;
  auto* scale_cmd = app.add_subcommand("scale", "Measure operation counts across graph sizes");
  scale_cmd->add_option("--family", scale_family, "complete, gnp or moon_moser")
      ->check(CLI::IsMember({"complete", "gnp", "moon_moser"}));
  scale_cmd->add_option("--sizes", scale_sizes, "Comma-separated sizes (k for moon_moser)")
      ->required()
      ->delimiter(',');
  scale_cmd->add_option("--p", scale_opts.p, "Edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  scale_cmd->add_option("--seed", scale_opts.seed, "Seed for gnp");
  scale_cmd->add_option("-o,--output", scale_out, "CSV output file (default stdout)");

  std::string cnf_path, sat_solver = "paper";
  auto* sat_cmd = app.add_subcommand("sat", "Decide a 3-CNF formula through the clique reduction");
  sat_cmd->add_option("--cnf", cnf_path, "DIMACS CNF file")->required();
  sat_cmd->add_option("--solver", sat_solver, "paper or oracle")->check(CLI::IsMember({"paper", "oracle"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (solve_cmd->parsed()) return solve(solve_args, out, err);
    if (gen_cmd->parsed()) {
      write_output(gen_out, write_dimacs_edge(generate(parse_generator_spec(gen_spec)).graph), out);
      return kExitOk;
    }
    if (audit_cmd->parsed()) return audit(audit_config, audit_csv, audit_json, out);
    if (scale_cmd->parsed()) {
      const ScalingReport r = run_scaling(parse_scaling_family(scale_family), scale_sizes, scale_opts);
      write_output(scale_out, format_scaling_csv(r), out);
      std::ostream& summary = scale_out.empty() || scale_out == "-" ? err : out;
      if (r.records.size() < 3) {
        summary << "slope fit refused: fewer than 3 sizes\n";
      } else {
        auto show = [](const std::optional<double>& s) { return s ? std::to_string(*s) : std::string("n/a"); };
        summary << "phase1_slope " << show(r.phase1_slope) << '\n' << "phase2_slope " << show(r.phase2_slope) << '\n';
      }
      return kExitOk;
    }
    if (sat_cmd->parsed()) {
      ParsedCnf parsed = parse_dimacs_cnf(read_file(cnf_path));
      for (const auto& w : parsed.warnings) err << "warning: " << cnf_path << ":" << w.line << ": " << w.message << '\n';
      const bool sat = decide_satisfiable(parsed.formula, sat_solver == "paper" ? SatSolver::TwoPhase : SatSolver::Oracle);
      out << (sat ? "SAT" : "UNSAT") << '\n';
      return sat ? kExitOk : kExitNegative;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace cliquemerge::cli
