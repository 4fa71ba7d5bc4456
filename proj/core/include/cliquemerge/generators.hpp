#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cliquemerge/graph.hpp"

namespace cliquemerge {

/// SplitMix64. state += 0x9E3779B97F4A7C15, then the output is mixed with
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
/// z = (z ^ (z >> 27)) * 0x94D049BB133111EB;
/// z ^ (z >> 31).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Top 53 bits of next() scaled into [0, 1).
  double next_unit();

  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

/// Advances state and returns the next output.
std::uint64_t prng_next(std::uint64_t& state);

enum class GeneratorKind { Complete, Gnp, MoonMoser, PlantedClique, Fig3a, Fig4a };

/// Which fields matter depends on kind:
///   complete        n >= 1
///   gnp             n, p, seed
///   moon_moser      k >= 1 (3k nodes)
///   planted_clique  n, k <= n, p, seed
///   fig3a, fig4a    none
struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Complete;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
  std::uint64_t seed = 0;

  bool operator==(const GeneratorSpec&) const = default;
};

/// Parses "kind" or "kind:key=value,..." (e.g. "gnp:n=20,p=0.5,seed=3").
/// Throws std::invalid_argument on unknown kinds or keys, missing required
/// keys and malformed values.
GeneratorSpec parse_generator_spec(std::string_view text);

/// Inverse of parse_generator_spec.
std::string to_string(const GeneratorSpec& spec);

std::string_view kind_name(GeneratorKind kind);

struct GeneratedGraph {
  Graph graph;
  /// Letter names for the fig3a and fig4a fixtures, empty otherwise.
  std::vector<std::string> names;
};

/// Deterministic in spec. Random kinds visit pairs (i, j), i < j, in
/// lexicographic order and include each when next_unit() < p.
GeneratedGraph generate(const GeneratorSpec& spec);

/// count G(n,p) specs: instance i has n = min_n + i % span,
/// p = probabilities[(i / span) % |probabilities|], seed = base_seed + i,
/// where span = max_n - min_n + 1.
std::vector<GeneratorSpec> gnp_batch(std::size_t count, std::size_t min_n, std::size_t max_n,
                                     std::span<const double> probabilities, std::uint64_t base_seed);

}  // namespace cliquemerge
