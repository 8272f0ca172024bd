#pragma once

#include "blossomcert/graph.hpp"

#include <stdexcept>
#include <vector>

namespace blossomcert {

struct OracleEntry {
  std::size_t k;
  Rational min_weight;
  Matching witness;  // lexicographically first optimum by edge index
};

/// Exhaustive ground truth: the minimum weight at every cardinality 0..nu.
struct OracleTable {
  std::vector<OracleEntry> by_cardinality;
  std::size_t nu = 0;

  const OracleEntry& at(std::size_t k) const { return by_cardinality.at(k); }
  /// Minimum over all cardinalities (0 is always attainable by the empty matching).
  Rational overall_minimum() const;
};

class OracleBudgetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr NodeId kDefaultOracleLimit = 16;

/// Enumerates every matching. Throws OracleBudgetError when the instance has
/// more than `limit` nodes (limit itself is capped at 64).
OracleTable min_weight_by_cardinality(const Instance& inst, NodeId limit = kDefaultOracleLimit);

std::size_t matching_number(const Instance& inst, NodeId limit = kDefaultOracleLimit);

}  // namespace blossomcert
