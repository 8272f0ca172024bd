#include "blossomcert/dual_state.hpp"

#include <algorithm>

namespace blossomcert {

bool OddSet::contains(NodeId v) const { return std::binary_search(nodes.begin(), nodes.end(), v); }

std::string DualState::structural_problem() const {
  const NodeId n = node_count();
  for (std::size_t i = 0; i < blossoms.size(); ++i) {
    const auto& nodes = blossoms[i].nodes;
    if (nodes.size() < 3 || nodes.size() % 2 == 0) {
      return "set " + std::to_string(i) + " has size " + std::to_string(nodes.size());
    }
    if (!std::is_sorted(nodes.begin(), nodes.end()) ||
        std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
      return "set " + std::to_string(i) + " is not strictly sorted";
    }
    if (nodes.front() < 0 || nodes.back() >= n) {
      return "set " + std::to_string(i) + " has a node out of range";
    }
  }
  for (std::size_t i = 0; i < blossoms.size(); ++i) {
    for (std::size_t j = i + 1; j < blossoms.size(); ++j) {
      const auto& a = blossoms[i].nodes;
      const auto& b = blossoms[j].nodes;
      std::vector<NodeId> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      if (common.empty() || common.size() == a.size() || common.size() == b.size()) {
        if (a == b) return "sets " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
        continue;
      }
      return "sets " + std::to_string(i) + " and " + std::to_string(j) + " cross";
    }
  }
  return {};
}

}  // namespace blossomcert
