#include "cliquemerge/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <stdexcept>
#include <utility>

namespace cliquemerge {

std::uint64_t SplitMix64::next() { return prng_next(state_); }

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t prng_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace {

constexpr std::array<std::pair<GeneratorKind, std::string_view>, 6> kKinds{{
    {GeneratorKind::Complete, "complete"},
    {GeneratorKind::Gnp, "gnp"},
    {GeneratorKind::MoonMoser, "moon_moser"},
    {GeneratorKind::PlantedClique, "planted_clique"},
    {GeneratorKind::Fig3a, "fig3a"},
    {GeneratorKind::Fig4a, "fig4a"},
}};

std::vector<std::string_view> required_keys(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::Complete: return {"n"};
    case GeneratorKind::Gnp: return {"n", "p", "seed"};
    case GeneratorKind::MoonMoser: return {"k"};
    case GeneratorKind::PlantedClique: return {"n", "k", "p", "seed"};
    default: return {};
  }
}

template <typename T>
T parse_number(std::string_view key, std::string_view value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw std::invalid_argument("bad value '" + std::string(value) + "' for generator key '" +
                                std::string(key) + "'");
  }
  return out;
}

std::string format_double(double v) {
  std::array<char, 32> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

void validate(const GeneratorSpec& s) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("invalid generator spec: " + msg); };
  const bool random = s.kind == GeneratorKind::Gnp || s.kind == GeneratorKind::PlantedClique;
  if (random && !(s.p >= 0.0 && s.p <= 1.0)) fail("p must be in [0, 1]");
  switch (s.kind) {
    case GeneratorKind::Complete:
      if (s.n < 1) fail("complete needs n >= 1");
      break;
    case GeneratorKind::MoonMoser:
      if (s.k < 1) fail("moon_moser needs k >= 1");
      break;
    case GeneratorKind::PlantedClique:
      if (s.k < 1 || s.k > s.n) fail("planted_clique needs 1 <= k <= n");
      break;
    default:
      break;
  }
}

GeneratedGraph from_edges(std::vector<std::string> names, std::span<const std::pair<char, char>> edges) {
  GeneratedGraph out;
  for (std::size_t i = 0; i < names.size(); ++i) out.graph.add_node();
  for (auto [a, b] : edges) out.graph.connect(static_cast<NodeId>(a - 'A'), static_cast<NodeId>(b - 'A'));
  out.names = std::move(names);
  return out;
}

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node();
  SplitMix64 rng(seed);
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) g.connect(i, j);
  return g;
}

}  // namespace

std::string_view kind_name(GeneratorKind kind) {
  for (auto [k, name] : kKinds)
    if (k == kind) return name;
  return "unknown";
}

GeneratorSpec parse_generator_spec(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view kind_text = text.substr(0, colon);
  GeneratorSpec spec;
  bool known = false;
  for (auto [k, name] : kKinds) {
    if (name == kind_text) {
      spec.kind = k;
      known = true;
    }
  }
  if (!known) throw std::invalid_argument("unknown generator kind '" + std::string(kind_text) + "'");

  std::map<std::string, std::string, std::less<>> kv;
  if (colon != std::string_view::npos) {
    std::string_view rest = text.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos || eq == 0) {
        throw std::invalid_argument("malformed generator option '" + std::string(item) + "'");
      }
      kv.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
    }
  }

  const auto req = required_keys(spec.kind);
  for (const auto& [key, value] : kv) {
    if (std::find(req.begin(), req.end(), key) == req.end()) {
      throw std::invalid_argument("generator '" + std::string(kind_text) + "' does not take '" + key + "'");
    }
    if (key == "n") spec.n = parse_number<std::size_t>(key, value);
    if (key == "k") spec.k = parse_number<std::size_t>(key, value);
    if (key == "p") spec.p = parse_number<double>(key, value);
    if (key == "seed") spec.seed = parse_number<std::uint64_t>(key, value);
  }
  for (std::string_view key : req) {
    if (kv.find(key) == kv.end()) {
      throw std::invalid_argument("generator '" + std::string(kind_text) + "' requires '" + std::string(key) + "'");
    }
  }
  validate(spec);
  return spec;
}

std::string to_string(const GeneratorSpec& s) {
  std::string out(kind_name(s.kind));
  switch (s.kind) {
    case GeneratorKind::Complete:
      return out + ":n=" + std::to_string(s.n);
    case GeneratorKind::Gnp:
      return out + ":n=" + std::to_string(s.n) + ",p=" + format_double(s.p) + ",seed=" + std::to_string(s.seed);
    case GeneratorKind::MoonMoser:
      return out + ":k=" + std::to_string(s.k);
    case GeneratorKind::PlantedClique:
      return out + ":n=" + std::to_string(s.n) + ",k=" + std::to_string(s.k) + ",p=" + format_double(s.p) +
             ",seed=" + std::to_string(s.seed);
    default:
      return out;
  }
}

GeneratedGraph generate(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GeneratorKind::Fig3a: {
      static constexpr std::pair<char, char> kEdges[] = {{'A', 'B'}, {'A', 'C'}, {'A', 'D'}, {'B', 'C'}, {'B', 'D'},
                                                         {'C', 'D'}, {'C', 'E'}, {'C', 'F'}, {'E', 'F'}};
      return from_edges({"A", "B", "C", "D", "E", "F"}, kEdges);
    }
    case GeneratorKind::Fig4a: {
      static constexpr std::pair<char, char> kEdges[] = {
          {'C', 'A'}, {'C', 'B'}, {'C', 'D'}, {'C', 'E'}, {'C', 'F'}, {'C', 'G'}, {'A', 'B'}, {'A', 'D'},
          {'A', 'E'}, {'A', 'F'}, {'B', 'D'}, {'B', 'E'}, {'D', 'E'}, {'E', 'F'}, {'E', 'G'}, {'F', 'G'}};
      return from_edges({"A", "B", "C", "D", "E", "F", "G"}, kEdges);
    }
    case GeneratorKind::Complete: {
      GeneratedGraph out;
      out.graph.new_complete_subgraph(spec.n);
      return out;
    }
    case GeneratorKind::Gnp:
      return {gnp(spec.n, spec.p, spec.seed), {}};
    case GeneratorKind::MoonMoser: {
      GeneratedGraph out;
      const std::size_t n = 3 * spec.k;
      for (std::size_t i = 0; i < n; ++i) out.graph.add_node();
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
          if (i / 3 != j / 3) out.graph.connect(i, j);
      return out;
    }
    case GeneratorKind::PlantedClique: {
      GeneratedGraph out{gnp(spec.n, spec.p, spec.seed), {}};
      for (NodeId i = 0; i < spec.k; ++i)
        for (NodeId j = i + 1; j < spec.k; ++j) out.graph.connect(i, j);
      return out;
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

std::vector<GeneratorSpec> gnp_batch(std::size_t count, std::size_t min_n, std::size_t max_n,
                                     std::span<const double> probabilities, std::uint64_t base_seed) {
  if (min_n > max_n || probabilities.empty()) throw std::invalid_argument("empty G(n,p) batch range");
  const std::size_t span = max_n - min_n + 1;
  std::vector<GeneratorSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    GeneratorSpec s;
    s.kind = GeneratorKind::Gnp;
    s.n = min_n + i % span;
    s.p = probabilities[(i / span) % probabilities.size()];
    s.seed = base_seed + i;
    out.push_back(s);
  }
  return out;
}

}  // namespace cliquemerge
