#include "blossomcert/scenario.hpp"

namespace blossomcert {

Instance figure2_instance() {
  auto a = [](NodeId i) { return i - 1; };
  auto b = [](NodeId i) { return i + 2; };
  auto c = [](NodeId i) { return i + 5; };
  std::vector<Edge> edges;
  for (NodeId i = 1; i <= 3; ++i) {
    edges.push_back(Edge{a(i), b(i), Rational(0)});
    edges.push_back(Edge{b(i), c(i), Rational(0)});
  }
  edges.push_back(Edge{a(1), a(2), Rational(3)});
  edges.push_back(Edge{a(2), a(3), Rational(5)});
  edges.push_back(Edge{a(1), a(3), Rational(4)});
  return Instance(9, std::move(edges));
}

namespace {

std::vector<CardinalityWeight> weights_of(const RunResult& run) {
  std::vector<CardinalityWeight> out;
  for (const Snapshot& s : run.snapshots) out.push_back({s.cardinality, s.weight});
  return out;
}

}  // namespace

ScenarioReport compare_dual_policies(const Instance& inst, const std::vector<Rational>& amounts) {
  ScenarioReport report;
  report.uniform_result = weights_of(solve(inst, SolveMode::maximum));

  try {
    report.scripted_result =
        weights_of(solve(inst, SolveMode::maximum, DualPolicy::scripted({amounts})));
  } catch (const InfeasibleDualUpdate& err) {
    report.scripted_error = err.what();
  }

  const OracleTable table = min_weight_by_cardinality(inst);
  for (const OracleEntry& e : table.by_cardinality) {
    report.oracle_minima.push_back({e.k, e.min_weight});
  }

  for (const CardinalityWeight& s : report.scripted_result) {
    if (s.k < report.oracle_minima.size() && s.weight > report.oracle_minima[s.k].weight) {
      report.divergence = s.k;
      break;
    }
  }
  return report;
}

}  // namespace blossomcert
