#include "blossomcert/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace blossomcert {
namespace {

struct Search {
  const Instance& inst;
  std::vector<std::optional<Rational>> best;
  std::vector<std::vector<std::size_t>> best_edges;
  std::vector<std::size_t> chosen;

  // Visits each matching once, as an ascending sequence of edge indices, in
  // lexicographic order. Keeping only strict improvements leaves the
  // lexicographically first optimum as the witness.
  void visit(std::size_t from, std::uint64_t used, const Rational& weight) {
    const std::size_t k = chosen.size();
    if (!best[k] || weight < *best[k]) {
      best[k] = weight;
      best_edges[k] = chosen;
    }
    for (std::size_t i = from; i < inst.edge_count(); ++i) {
      const Edge& e = inst.edge(i);
      const std::uint64_t mask = (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
      if (used & mask) continue;
      chosen.push_back(i);
      visit(i + 1, used | mask, weight + e.weight);
      chosen.pop_back();
    }
  }
};

}  // namespace

Rational OracleTable::overall_minimum() const {
  Rational best = 0;
  for (const OracleEntry& e : by_cardinality) best = std::min(best, e.min_weight);
  return best;
}

OracleTable min_weight_by_cardinality(const Instance& inst, NodeId limit) {
  limit = std::min<NodeId>(limit, 64);
  if (inst.node_count() > limit) {
    throw OracleBudgetError("instance has " + std::to_string(inst.node_count()) +
                            " nodes, oracle budget is " + std::to_string(limit));
  }
  const std::size_t max_k = static_cast<std::size_t>(inst.node_count()) / 2;
  Search search{inst, std::vector<std::optional<Rational>>(max_k + 1),
                std::vector<std::vector<std::size_t>>(max_k + 1), {}};
  search.visit(0, 0, Rational(0));

  OracleTable table;
  for (std::size_t k = 0; k <= max_k && search.best[k]; ++k) {
    std::vector<NodePair> pairs;
    for (std::size_t i : search.best_edges[k]) pairs.emplace_back(inst.edge(i).u, inst.edge(i).v);
    table.by_cardinality.push_back(OracleEntry{k, *search.best[k], Matching(std::move(pairs))});
    table.nu = k;
  }
  return table;
}

std::size_t matching_number(const Instance& inst, NodeId limit) {
  return min_weight_by_cardinality(inst, limit).nu;
}

}  // namespace blossomcert
