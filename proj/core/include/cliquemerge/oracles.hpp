#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>

#include "cliquemerge/graph.hpp"

namespace cliquemerge {

// Reference answers computed without any of the two-phase machinery.

struct OracleLimits {
  static constexpr std::size_t kBruteForceHardCap = 24;
  std::size_t brute_force_max_nodes = 16;
};

class GraphTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Checks every non-empty vertex subset. Throws GraphTooLarge past the limit
/// and std::invalid_argument if the limit itself exceeds the hard cap.
CliqueSet brute_force_maximal_cliques(const Graph& g, const OracleLimits& limits = {});

/// Bron–Kerbosch with pivoting. The pivot is the vertex of P ∪ X with the
/// most neighbors in P, ties to the smallest id.
CliqueSet bron_kerbosch_pivot(const Graph& g);

/// 0 for the empty graph.
std::size_t max_clique_size_oracle(const Graph& g);

/// All triangles containing v, by enumerating vertex triples.
std::set<Clique> triangles_oracle(const Graph& g, NodeId v);

}  // namespace cliquemerge
