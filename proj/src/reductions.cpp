#include "blossomcert/reductions.hpp"

#include <algorithm>

namespace blossomcert {

AuxiliaryCompletion build_auxiliary_completion(const Instance& inst, const Snapshot& snapshot) {
  const NodeId n = inst.node_count();
  if (snapshot.duals.node_count() != n) {
    throw std::invalid_argument("snapshot does not belong to this instance");
  }
  const DualAccumulation acc = accumulate_duals(snapshot.duals);

  std::vector<NodeId> exposed;
  for (NodeId v = 0; v < n; ++v) {
    if (!snapshot.matching.covers(v)) exposed.push_back(v);
  }
  for (NodeId v : exposed) {
    if (acc.pi_star[v] != acc.pi_star_max) {
      throw CompletionRefused("exposed node " + std::to_string(v + 1) + " has accumulated dual " +
                              to_string(acc.pi_star[v]) + " below the maximum " +
                              to_string(acc.pi_star_max));
    }
  }

  const NodeId k = static_cast<NodeId>(exposed.size());
  std::vector<Edge> edges = inst.edges();
  edges.reserve(edges.size() + static_cast<std::size_t>(k) * static_cast<std::size_t>(n));
  for (NodeId i = 0; i < k; ++i) {
    for (NodeId v = 0; v < n; ++v) edges.push_back(Edge{v, n + i, Rational(0)});
  }

  std::vector<NodePair> pairs = snapshot.matching.pairs();
  for (NodeId i = 0; i < k; ++i) pairs.emplace_back(exposed[i], n + i);

  DualState lifted = snapshot.duals;
  for (NodeId i = 0; i < k; ++i) lifted.singleton_pi.push_back(-acc.pi_star_max);

  return AuxiliaryCompletion{Instance(n + k, std::move(edges)), Matching(std::move(pairs)),
                             std::move(lifted), std::move(exposed), n};
}

Verdict check_perfect_certificate(const AuxiliaryCompletion& comp) {
  const Instance& aux = comp.aux_instance;
  const Matching& m = comp.extended_matching;
  if (2 * m.size() != static_cast<std::size_t>(aux.node_count())) {
    throw std::invalid_argument("extended matching is not perfect");
  }
  if (!is_matching_of(aux, m)) throw std::invalid_argument("extended matching uses a non-edge");

  Verdict verdict = check_cut_feasibility(aux, comp.lifted_duals);
  const DualAccumulation acc = accumulate_duals(comp.lifted_duals);

  for (const NodePair& p : m.pairs()) {
    Rational load = acc.pi_star[p.first] + acc.pi_star[p.second];
    for (const OddSet& u : comp.lifted_duals.blossoms) {
      if (u.contains(p.first) && u.contains(p.second)) load -= 2 * u.pi;
    }
    const Rational& w = aux.edge(*aux.find_edge(p.first, p.second)).weight;
    if (load != w) {
      verdict.violations.push_back(Violation{std::string(constraint::cs_tight_edge),
                                             "edge {" + std::to_string(p.first + 1) + "," +
                                                 std::to_string(p.second + 1) + "}",
                                             load, w, {}});
    }
  }

  for (const OddSet& u : comp.lifted_duals.blossoms) {
    if (u.pi <= 0) continue;
    std::size_t leaving = 0;
    for (const NodePair& p : m.pairs()) {
      if (u.contains(p.first) != u.contains(p.second)) ++leaving;
    }
    if (leaving != 1) {
      std::string name = "set {";
      for (std::size_t i = 0; i < u.nodes.size(); ++i) {
        name += (i ? "," : "") + std::to_string(u.nodes[i] + 1);
      }
      verdict.violations.push_back(Violation{std::string(constraint::cs_cut_tight), name + "}",
                                             Rational(leaving), Rational(1), {}});
    }
  }
  return verdict;
}

Instance build_doubled_graph(const Instance& inst) {
  const NodeId n = inst.node_count();
  std::vector<Edge> edges;
  edges.reserve(2 * inst.edge_count() + static_cast<std::size_t>(n));
  for (const Edge& e : inst.edges()) edges.push_back(e);
  for (const Edge& e : inst.edges()) edges.push_back(Edge{n + e.u, n + e.v, e.weight});
  for (NodeId v = 0; v < n; ++v) edges.push_back(Edge{v, n + v, Rational(0)});
  return Instance(2 * n, std::move(edges));
}

std::optional<Rational> min_perfect_matching_weight(const Instance& inst) {
  const NormalizedInstance norm = normalize_weights(inst);
  const RunResult run = solve(norm.instance, SolveMode::perfect);
  if (run.infeasible()) return std::nullopt;
  const Snapshot& snap = run.final_snapshot();
  return snap.weight - Rational(snap.cardinality) * norm.record.shift;
}

}  // namespace blossomcert
