#pragma once

#include "blossomcert/graph.hpp"
#include "blossomcert/rational.hpp"

#include <string>
#include <vector>

namespace blossomcert {

/// Member of the laminar family with |U| >= 3, nodes sorted ascending.
struct OddSet {
  std::vector<NodeId> nodes;
  Rational pi;

  bool contains(NodeId v) const;
  friend bool operator==(const OddSet&, const OddSet&) = default;
};

/// Laminar family of odd sets with their dual values. Singletons are always
/// members and are stored densely; larger sets are listed in `blossoms`.
struct DualState {
  std::vector<Rational> singleton_pi;
  std::vector<OddSet> blossoms;
  Rational beta = 0;

  NodeId node_count() const { return static_cast<NodeId>(singleton_pi.size()); }

  /// Empty when the family is laminar, every set is odd with at least three
  /// valid nodes; otherwise a description of the first problem.
  std::string structural_problem() const;

  friend bool operator==(const DualState&, const DualState&) = default;
};

}  // namespace blossomcert
