#pragma once

#include "blossomcert/graph.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace blossomcert::testing {

/// Matching from 1-based pairs.
inline Matching pairs(std::initializer_list<std::pair<NodeId, NodeId>> list) {
  std::vector<NodePair> out;
  for (auto [a, b] : list) out.emplace_back(a - 1, b - 1);
  return Matching(std::move(out));
}

/// 1-2-3-4 with weights 5, 1, 5.
inline Instance path4() { return Instance(4, {{0, 1, 5}, {1, 2, 1}, {2, 3, 5}}); }

/// Triangle with weights {1,2} = 1, {1,3} = 2, {2,3} = 3.
inline Instance triangle() { return Instance(3, {{0, 1, 1}, {0, 2, 2}, {1, 2, 3}}); }

/// Zero-weight triangle 1-2-3 with a pendant edge {1,4} of weight 2.
inline Instance triangle_with_pendant() {
  return Instance(4, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {0, 3, 2}});
}

/// Zero-weight triangle matched out through {3,4}; node 5 hangs off node 1
/// with weight 2. The triangle later sits on an odd tree level with value 0.
inline Instance drained_blossom_instance() {
  return Instance(5, {{0, 1, 0}, {1, 2, 0}, {0, 2, 0}, {2, 3, 0}, {0, 4, 2}});
}

}  // namespace blossomcert::testing
