#include "cliquemerge/audit.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cliquemerge/graph_io.hpp"
#include "cliquemerge/oracles.hpp"
#include "parallel.hpp"

namespace cliquemerge {

namespace {

using Clock = std::chrono::steady_clock;

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = s.find(',');
    std::string item = trim(s.substr(0, comma));
    if (!item.empty()) out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out.flush()) throw std::runtime_error("cannot write '" + path + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::size_t count_missing(const CliqueSet& from, const CliqueSet& in) {
  std::size_t n = 0;
  for (const Clique& c : from)
    if (!in.contains(c)) ++n;
  return n;
}

}  // namespace

bool AuditRecord::consistent() const {
  if (missed_cliques > oracle_clique_count || spurious_cliques > paper_clique_count) return false;
  if (paper_clique_count - spurious_cliques + missed_cliques != oracle_clique_count) return false;
  if (soundness_violations == 0 && paper_max_size > oracle_max_size) return false;
  return soundness_violations + maximality_violations <= paper_clique_count;
}

AuditRecord audit_graph(const Graph& g, std::string descriptor, const AuditOptions& opts) {
  if (g.node_count() > opts.oracle_max_nodes) {
    throw GraphTooLarge("graph has " + std::to_string(g.node_count()) + " nodes; oracle cap is " +
                        std::to_string(opts.oracle_max_nodes));
  }
  AuditRecord rec;
  rec.descriptor = std::move(descriptor);
  rec.n = g.node_count();
  rec.m = g.edge_count();

  CalcOptions calc = opts.calc;
  calc.merge.break_at_size.reset();
  auto t0 = Clock::now();
  CalcResult found = do_calculation(g, calc);
  auto t1 = Clock::now();
  CliqueSet oracle = bron_kerbosch_pivot(g);
  auto t2 = Clock::now();
  rec.paper_time = t1 - t0;
  rec.oracle_time = t2 - t1;

  rec.paper_clique_count = found.all_cliques.size();
  rec.oracle_clique_count = oracle.size();
  for (const Clique& c : found.all_cliques) {
    if (!is_clique(g, c)) {
      ++rec.soundness_violations;
    } else if (!is_maximal(g, c)) {
      ++rec.maximality_violations;
    }
  }
  rec.missed_cliques = count_missing(oracle, found.all_cliques);
  rec.spurious_cliques = count_missing(found.all_cliques, oracle);
  rec.paper_max_size = found.largest ? found.largest->size() : 0;
  for (const Clique& c : oracle) rec.oracle_max_size = std::max(rec.oracle_max_size, c.size());
  rec.phase1_ops = found.counters.phase1;
  rec.phase2_ops = found.counters.phase2;
  return rec;
}

Graph induced_subgraph(const Graph& g, const std::vector<bool>& keep) {
  std::vector<NodeId> relabel(g.node_count(), 0);
  Graph out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (keep.at(v)) relabel[v] = out.add_node();
  for (auto [a, b] : g.edges())
    if (keep[a] && keep[b]) out.connect(relabel[a], relabel[b]);
  return out;
}

Graph shrink_graph(const Graph& g, const std::function<bool(const Graph&)>& keep) {
  Graph current = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (NodeId v = 0; v < current.node_count(); ++v) {
      std::vector<bool> mask(current.node_count(), true);
      mask[v] = false;
      Graph candidate = induced_subgraph(current, mask);
      if (keep(candidate)) {
        current = std::move(candidate);
        changed = true;
        break;
      }
    }
  }
  return current;
}

KeyNodeStrategy parse_key_strategy(std::string_view name) {
  if (name == "first") return KeyNodeStrategy::FirstOfPair;
  if (name == "second") return KeyNodeStrategy::SecondOfPair;
  if (name == "both") return KeyNodeStrategy::Both;
  throw std::invalid_argument("unknown key strategy '" + std::string(name) + "' (first, second, both)");
}

ScalingFamily parse_scaling_family(std::string_view name) {
  if (name == "complete") return ScalingFamily::Complete;
  if (name == "gnp") return ScalingFamily::Gnp;
  if (name == "moon_moser") return ScalingFamily::MoonMoser;
  throw std::invalid_argument("unknown scaling family '" + std::string(name) + "'");
}

CampaignConfig parse_campaign_config(std::string_view text) {
  CampaignConfig cfg;
  std::vector<GeneratorSpec> fixtures, complete, moon_moser, extra;
  std::size_t gnp_trials = 0;
  std::size_t gnp_min = 4, gnp_max = 12;
  std::vector<double> gnp_p{0.3, 0.5, 0.7};
  std::uint64_t gnp_seed = 1;

  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    auto bad = [&](const std::string& msg) -> std::invalid_argument {
      return std::invalid_argument("campaign config line " + std::to_string(line_no) + ": " + msg);
    };
    if (eq == std::string::npos) throw bad("expected 'key = value'");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));

    try {
      auto as_size = [&](const std::string& s) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size() || s.front() == '-') throw bad("expected a non-negative integer, got '" + s + "'");
        return static_cast<std::size_t>(v);
      };
      auto as_bool = [&](const std::string& s) {
        if (s == "true" || s == "1" || s == "yes") return true;
        if (s == "false" || s == "0" || s == "no") return false;
        throw bad("expected a boolean, got '" + s + "'");
      };
      if (key == "fixtures") {
        for (const auto& f : split_list(value)) {
          GeneratorSpec s = parse_generator_spec(f);
          if (s.kind != GeneratorKind::Fig3a && s.kind != GeneratorKind::Fig4a) throw bad("'" + f + "' is not a fixture");
          fixtures.push_back(s);
        }
      } else if (key == "complete") {
        for (const auto& f : split_list(value)) complete.push_back(parse_generator_spec("complete:n=" + f));
      } else if (key == "moon_moser") {
        for (const auto& f : split_list(value)) moon_moser.push_back(parse_generator_spec("moon_moser:k=" + f));
      } else if (key == "gnp.trials") {
        gnp_trials = as_size(value);
      } else if (key == "gnp.sizes") {
        if (const auto dash = value.find('-'); dash != std::string::npos) {
          gnp_min = as_size(trim(std::string_view(value).substr(0, dash)));
          gnp_max = as_size(trim(std::string_view(value).substr(dash + 1)));
        } else {
          auto items = split_list(value);
          if (items.size() != 1) throw bad("gnp.sizes takes 'min-max' or a single size");
          gnp_min = gnp_max = as_size(items[0]);
        }
        if (gnp_min > gnp_max) throw bad("empty gnp.sizes range");
      } else if (key == "gnp.p") {
        gnp_p.clear();
        for (const auto& f : split_list(value)) {
          std::size_t pos = 0;
          const double p = std::stod(f, &pos);
          if (pos != f.size() || !(p >= 0.0 && p <= 1.0)) throw bad("probability out of range: '" + f + "'");
          gnp_p.push_back(p);
        }
        if (gnp_p.empty()) throw bad("gnp.p is empty");
      } else if (key == "gnp.seed") {
        gnp_seed = std::stoull(value);
      } else if (key == "generator") {
        extra.push_back(parse_generator_spec(value));
      } else if (key == "file") {
        cfg.files.push_back(value);
      } else if (key == "csv") {
        cfg.csv_path = value;
      } else if (key == "json") {
        cfg.json_path = value;
      } else if (key == "reproducer_dir") {
        cfg.reproducer_dir = value;
      } else if (key == "witness") {
        cfg.witness_path = value;
      } else if (key == "key_strategy") {
        cfg.audit.calc.merge.key_node = parse_key_strategy(value);
      } else if (key == "include_singletons") {
        cfg.audit.calc.include_singletons = as_bool(value);
      } else if (key == "oracle_max_nodes") {
        cfg.audit.oracle_max_nodes = as_size(value);
      } else if (key == "timings") {
        cfg.timings = as_bool(value);
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(std::max<std::size_t>(1, as_size(value)));
      } else {
        throw bad("unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument& e) {
      const std::string what = e.what();
      if (what.rfind("campaign config line", 0) == 0) throw;
      throw bad(what);
    } catch (const std::out_of_range&) {
      throw bad("value out of range for '" + key + "'");
    }
  }

  cfg.generators = std::move(fixtures);
  cfg.generators.insert(cfg.generators.end(), complete.begin(), complete.end());
  cfg.generators.insert(cfg.generators.end(), moon_moser.begin(), moon_moser.end());
  const auto batch = gnp_batch(gnp_trials, gnp_min, gnp_max, gnp_p, gnp_seed);
  cfg.generators.insert(cfg.generators.end(), batch.begin(), batch.end());
  cfg.generators.insert(cfg.generators.end(), extra.begin(), extra.end());
  return cfg;
}

CampaignReport run_audit_campaign(const CampaignConfig& config) {
  struct Instance {
    std::string descriptor;
    Graph graph;
  };
  std::vector<Instance> instances;
  for (const auto& spec : config.generators) instances.push_back({to_string(spec), generate(spec).graph});
  for (const auto& path : config.files) {
    instances.push_back({"file:" + path, parse_dimacs_edge(read_file(path)).graph});
  }

  CampaignReport report;
  report.records.resize(instances.size());
  detail::for_each_node(instances.size(), config.workers, [&](NodeId i) {
    report.records[i] = audit_graph(instances[i].graph, instances[i].descriptor, config.audit);
  });

  CampaignSummary& s = report.summary;
  const Instance* smallest_divergence = nullptr;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const AuditRecord& r = report.records[i];
    ++s.instances;
    s.soundness_violations += r.soundness_violations;
    s.maximality_violations += r.maximality_violations;
    s.missed_cliques += r.missed_cliques;
    s.spurious_cliques += r.spurious_cliques;
    if (r.missed_cliques == 0) ++s.complete_instances;
    if (r.paper_max_size == r.oracle_max_size) ++s.max_size_agreements;
    if (r.missed_cliques > 0) {
      const Graph& g = instances[i].graph;
      if (!smallest_divergence || g.node_count() < smallest_divergence->graph.node_count() ||
          (g.node_count() == smallest_divergence->graph.node_count() &&
           g.edge_count() < smallest_divergence->graph.edge_count())) {
        smallest_divergence = &instances[i];
      }
    }
  }

  if (smallest_divergence) {
    s.divergence_descriptor = smallest_divergence->descriptor;
    s.divergence_witness = shrink_graph(smallest_divergence->graph, [&](const Graph& g) {
      return audit_graph(g, {}, config.audit).missed_cliques > 0;
    });
  }

  if (!config.reproducer_dir.empty()) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      const AuditRecord& r = report.records[i];
      if (r.soundness_violations + r.maximality_violations == 0) continue;
      Graph minimal = shrink_graph(instances[i].graph, [&](const Graph& g) {
        const AuditRecord a = audit_graph(g, {}, config.audit);
        return a.soundness_violations + a.maximality_violations > 0;
      });
      std::filesystem::create_directories(config.reproducer_dir);
      const std::string path = config.reproducer_dir + "/violation_" + std::to_string(i) + ".dimacs";
      write_file(path, "c reproducer for " + r.descriptor + "\n" + write_dimacs_edge(minimal));
      report.reproducers.push_back(path);
    }
  }
  if (!config.witness_path.empty() && s.divergence_witness) {
    write_file(config.witness_path,
               "c missed-clique witness shrunk from " + *s.divergence_descriptor + "\n" +
                   write_dimacs_edge(*s.divergence_witness));
  }
  if (!config.csv_path.empty()) write_file(config.csv_path, format_audit_csv(report.records, config.timings));
  if (!config.json_path.empty()) write_file(config.json_path, format_audit_json(report, config.timings));
  return report;
}

std::string format_audit_csv(std::span<const AuditRecord> records, bool timings) {
  std::ostringstream os;
  os << "descriptor,n,m,paper_cliques,oracle_cliques,soundness_violations,maximality_violations,"
        "missed_cliques,spurious_cliques,paper_max_size,oracle_max_size,phase1_ops,phase2_ops";
  if (timings) os << ",paper_time_ns,oracle_time_ns";
  os << '\n';
  for (const AuditRecord& r : records) {
    os << csv_field(r.descriptor) << ',' << r.n << ',' << r.m << ',' << r.paper_clique_count << ','
       << r.oracle_clique_count << ',' << r.soundness_violations << ',' << r.maximality_violations << ','
       << r.missed_cliques << ',' << r.spurious_cliques << ',' << r.paper_max_size << ',' << r.oracle_max_size
       << ',' << r.phase1_ops << ',' << r.phase2_ops;
    if (timings) os << ',' << r.paper_time.count() << ',' << r.oracle_time.count();
    os << '\n';
  }
  return os.str();
}

std::string format_audit_json(const CampaignReport& report, bool timings) {
  using nlohmann::json;
  json records = json::array();
  for (const AuditRecord& r : report.records) {
    json j{{"descriptor", r.descriptor},
           {"n", r.n},
           {"m", r.m},
           {"paper_cliques", r.paper_clique_count},
           {"oracle_cliques", r.oracle_clique_count},
           {"soundness_violations", r.soundness_violations},
           {"maximality_violations", r.maximality_violations},
           {"missed_cliques", r.missed_cliques},
           {"spurious_cliques", r.spurious_cliques},
           {"paper_max_size", r.paper_max_size},
           {"oracle_max_size", r.oracle_max_size},
           {"phase1_ops", r.phase1_ops},
           {"phase2_ops", r.phase2_ops}};
    if (timings) {
      j["paper_time_ns"] = r.paper_time.count();
      j["oracle_time_ns"] = r.oracle_time.count();
    }
    records.push_back(std::move(j));
  }
  const CampaignSummary& s = report.summary;
  auto rate = [&](std::size_t k) { return s.instances ? static_cast<double>(k) / s.instances : 0.0; };
  json summary{{"instances", s.instances},
               {"soundness_violations", s.soundness_violations},
               {"maximality_violations", s.maximality_violations},
               {"missed_cliques", s.missed_cliques},
               {"spurious_cliques", s.spurious_cliques},
               {"complete_instances", s.complete_instances},
               {"completeness_rate", rate(s.complete_instances)},
               {"max_size_agreement_rate", rate(s.max_size_agreements)}};
  if (s.divergence_descriptor) {
    summary["divergence_instance"] = *s.divergence_descriptor;
    summary["divergence_witness_dimacs"] = write_dimacs_edge(*s.divergence_witness);
  } else {
    summary["divergence_instance"] = nullptr;
  }
  json out{{"records", std::move(records)}, {"summary", std::move(summary)}};
  return out.dump(2) + "\n";
}

std::optional<double> fit_loglog_slope(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("slope fit needs matching x and y");
  if (xs.size() < 3) throw std::invalid_argument("slope fit needs at least 3 points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0) || !(ys[i] > 0)) return std::nullopt;
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double k = static_cast<double>(xs.size());
  const double denom = k * sxx - sx * sx;
  if (denom == 0) return std::nullopt;
  return (k * sxy - sx * sy) / denom;
}

ScalingReport run_scaling(ScalingFamily family, std::span<const std::size_t> sizes, const ScalingOptions& opts) {
  for (std::size_t i = 1; i < sizes.size(); ++i) {
    if (sizes[i] <= sizes[i - 1]) throw std::invalid_argument("scaling sizes must be strictly ascending");
  }
  ScalingReport report;
  CalcOptions calc = opts.calc;
  calc.merge.break_at_size.reset();
  for (std::size_t size : sizes) {
    GeneratorSpec spec;
    switch (family) {
      case ScalingFamily::Complete:
        spec = {.kind = GeneratorKind::Complete, .n = size};
        break;
      case ScalingFamily::Gnp:
        spec = {.kind = GeneratorKind::Gnp, .n = size, .p = opts.p, .seed = opts.seed};
        break;
      case ScalingFamily::MoonMoser:
        spec = {.kind = GeneratorKind::MoonMoser, .k = size};
        break;
    }
    const Graph g = generate(spec).graph;
    const auto t0 = Clock::now();
    const CalcResult r = do_calculation(g, calc);
    ScalingRecord rec;
    rec.wall_time = Clock::now() - t0;
    rec.n = g.node_count();
    rec.phase1_ops = r.counters.phase1;
    rec.phase2_ops = r.counters.phase2;
    report.records.push_back(rec);
  }
  if (report.records.size() >= 3) {
    std::vector<double> xs, p1, p2;
    for (const auto& r : report.records) {
      xs.push_back(static_cast<double>(r.n));
      p1.push_back(static_cast<double>(r.phase1_ops));
      p2.push_back(static_cast<double>(r.phase2_ops));
    }
    report.phase1_slope = fit_loglog_slope(xs, p1);
    report.phase2_slope = fit_loglog_slope(xs, p2);
  }
  return report;
}

std::string format_scaling_csv(const ScalingReport& report) {
  std::ostringstream os;
  os << "n,phase1_ops,phase2_ops,wall_time_ns\n";
  for (const auto& r : report.records) {
    os << r.n << ',' << r.phase1_ops << ',' << r.phase2_ops << ',' << r.wall_time.count() << '\n';
  }
  return os.str();
}

}  // namespace cliquemerge
