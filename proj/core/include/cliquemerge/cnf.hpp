#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cliquemerge {

struct Literal {
  std::uint32_t variable = 1;  // 1-based
  bool negated = false;

  bool complements(const Literal& o) const { return variable == o.variable && negated != o.negated; }
  bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

/// A 3-CNF formula. Every variable index is in [1, variable_count].
struct CnfFormula {
  std::uint32_t variable_count = 0;
  std::vector<Clause> clauses;

  /// Throws std::invalid_argument when a literal is out of range.
  void validate() const;
  bool satisfied_by(const std::vector<bool>& assignment) const;  // assignment[0] unused

  bool operator==(const CnfFormula&) const = default;
};

}  // namespace cliquemerge
