#pragma once

#include "blossomcert/blossom_engine.hpp"
#include "blossomcert/certificates.hpp"
#include "blossomcert/graph.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace blossomcert {

/// A snapshot's matching completed to a perfect matching by attaching one
/// weight-0 partner u_i to every exposed node. Partner u_i (1-based i) has
/// internal id n + i - 1 and is joined to every original node.
struct AuxiliaryCompletion {
  Instance aux_instance;
  Matching extended_matching;
  DualState lifted_duals;
  std::vector<NodeId> exposed;  // v_1 < ... < v_k, matched to u_1..u_k
  NodeId original_node_count = 0;
};

class CompletionRefused : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws CompletionRefused when an exposed node's accumulated dual differs
/// from the maximum (the lifted duals would not make its new edge tight).
AuxiliaryCompletion build_auxiliary_completion(const Instance& inst, const Snapshot& snapshot);

/// Dual feasibility on the auxiliary graph, tightness of every matched edge,
/// and exactly one matched edge leaving each set with positive value. A pass
/// proves the extended matching is a minimum-weight perfect matching.
/// Throws std::invalid_argument if the matching is not perfect.
Verdict check_perfect_certificate(const AuxiliaryCompletion& comp);

/// Original graph, a mirror copy (node v -> n + v) with the same weights, and
/// a weight-0 bridge {v, n + v} for every node. Edge order: originals,
/// mirrors, bridges.
Instance build_doubled_graph(const Instance& inst);

/// Minimum perfect matching weight via the engine in perfect mode, after
/// shifting weights to be nonnegative. nullopt if no perfect matching exists.
std::optional<Rational> min_perfect_matching_weight(const Instance& inst);

}  // namespace blossomcert
