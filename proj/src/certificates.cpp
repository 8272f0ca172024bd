#include "blossomcert/certificates.hpp"

#include <algorithm>
#include <stdexcept>

namespace blossomcert {
namespace {

std::string node_name(NodeId v) { return "node " + std::to_string(v + 1); }

std::string edge_name(const Edge& e) {
  return "edge {" + std::to_string(e.u + 1) + "," + std::to_string(e.v + 1) + "}";
}

std::string set_name(const std::vector<NodeId>& nodes) {
  std::string s = "set {";
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(nodes[i] + 1);
  }
  return s + "}";
}

void add(Verdict& v, std::string_view constraint, std::string witness, Rational lhs, Rational rhs) {
  v.violations.push_back(
      Violation{std::string(constraint), std::move(witness), std::move(lhs), std::move(rhs), {}});
}

}  // namespace

bool Verdict::has(std::string_view constraint) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.constraint == constraint; });
}

DualAccumulation accumulate_duals(const DualState& dual) {
  DualAccumulation acc;
  acc.pi_star = dual.singleton_pi;
  for (const OddSet& u : dual.blossoms) {
    for (NodeId v : u.nodes) acc.pi_star[v] += u.pi;
  }
  acc.pi_star_max = acc.pi_star.empty()
                        ? Rational(0)
                        : *std::max_element(acc.pi_star.begin(), acc.pi_star.end());
  return acc;
}

CardinalityCertificate transform_duals(const DualState& dual, std::size_t k) {
  const DualAccumulation acc = accumulate_duals(dual);
  CardinalityCertificate cert;
  cert.k = k;
  cert.gamma = 2 * acc.pi_star_max;
  cert.y.reserve(acc.pi_star.size());
  for (const Rational& p : acc.pi_star) cert.y.push_back(p - acc.pi_star_max);
  for (const OddSet& u : dual.blossoms) {
    if (u.pi != 0) cert.z.push_back(OddSet{u.nodes, Rational(-2 * u.pi)});
  }
  return cert;
}

Verdict check_cut_feasibility(const Instance& inst, const DualState& dual) {
  Verdict verdict;
  for (const OddSet& u : dual.blossoms) {
    if (u.pi < 0) add(verdict, constraint::blossom_nonneg, set_name(u.nodes), Rational(0), u.pi);
  }
  const DualAccumulation acc = accumulate_duals(dual);
  for (const Edge& e : inst.edges()) {
    // Sets containing both endpoints are counted twice in pi*(u) + pi*(v)
    // but do not separate them.
    Rational load = acc.pi_star[e.u] + acc.pi_star[e.v];
    for (const OddSet& u : dual.blossoms) {
      if (u.contains(e.u) && u.contains(e.v)) load -= 2 * u.pi;
    }
    if (load > e.weight) add(verdict, constraint::edge_cut, edge_name(e), load, e.weight);
  }
  return verdict;
}

Verdict check_cardinality_certificate(const Instance& inst, const Matching& m,
                                      const CardinalityCertificate& cert) {
  if (m.size() != cert.k) {
    throw std::invalid_argument("matching has " + std::to_string(m.size()) +
                                " edges, certificate is for cardinality " + std::to_string(cert.k));
  }
  if (cert.y.size() != static_cast<std::size_t>(inst.node_count())) {
    throw std::invalid_argument("certificate node count does not match the instance");
  }
  for (const NodePair& p : m.pairs()) {
    if (!inst.find_edge(p.first, p.second)) {
      throw std::invalid_argument("matching pair is not an edge of the instance");
    }
  }
  Verdict verdict;

  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (cert.y[v] > 0) add(verdict, constraint::y_nonpos, node_name(v), cert.y[v], Rational(0));
  }
  for (const OddSet& u : cert.z) {
    if (u.pi > 0) add(verdict, constraint::z_nonpos, set_name(u.nodes), u.pi, Rational(0));
  }

  for (const Edge& e : inst.edges()) {
    Rational lhs = cert.y[e.u] + cert.y[e.v] + cert.gamma;
    for (const OddSet& u : cert.z) {
      if (u.contains(e.u) && u.contains(e.v)) lhs += u.pi;
    }
    if (lhs > e.weight) add(verdict, constraint::edge_set, edge_name(e), lhs, e.weight);
    if (m.contains(e.u, e.v) && lhs != e.weight) {
      add(verdict, constraint::cs_tight_edge, edge_name(e), lhs, e.weight);
    }
  }

  for (NodeId v = 0; v < inst.node_count(); ++v) {
    if (cert.y[v] < 0 && !m.covers(v)) {
      add(verdict, constraint::cs_exposed_node, node_name(v), cert.y[v], Rational(0));
    }
  }
  for (const OddSet& u : cert.z) {
    if (u.pi < 0) {
      const auto inside = m.count_inside(u.nodes);
      const auto wanted = (u.nodes.size() - 1) / 2;
      if (inside != wanted) {
        add(verdict, constraint::cs_near_perfect, set_name(u.nodes), Rational(inside),
            Rational(wanted));
      }
    }
  }
  return verdict;
}

Verdict certify_snapshot(const Instance& inst, const Snapshot& snap) {
  Verdict verdict;
  if (snap.matching.size() != snap.cardinality) {
    add(verdict, constraint::cardinality, "matching size", Rational(snap.matching.size()),
        Rational(snap.cardinality));
    return verdict;
  }
  if (!is_matching_of(inst, snap.matching)) {
    add(verdict, constraint::snapshot_shape, "matching uses a non-edge", Rational(0), Rational(0));
    return verdict;
  }
  const Rational weight = matching_weight(inst, snap.matching);
  if (weight != snap.weight) {
    add(verdict, constraint::snapshot_shape, "recorded weight", snap.weight, weight);
  }
  if (snap.duals.node_count() != inst.node_count() || !snap.duals.structural_problem().empty()) {
    add(verdict, constraint::snapshot_shape, "dual family malformed", Rational(0), Rational(0));
    return verdict;
  }
  Verdict cut = check_cut_feasibility(inst, snap.duals);
  verdict.violations.insert(verdict.violations.end(), cut.violations.begin(), cut.violations.end());
  Verdict cs = check_cardinality_certificate(inst, snap.matching,
                                             transform_duals(snap.duals, snap.cardinality));
  verdict.violations.insert(verdict.violations.end(), cs.violations.begin(), cs.violations.end());
  return verdict;
}

Verdict verify_run(const Instance& inst, const RunResult& run) {
  Verdict verdict;
  for (std::size_t i = 0; i < run.snapshots.size(); ++i) {
    const Snapshot& snap = run.snapshots[i];
    Verdict local;
    if (snap.cardinality != i) {
      add(local, constraint::cardinality, "snapshot " + std::to_string(i),
          Rational(snap.cardinality), Rational(i));
    }
    Verdict cert = certify_snapshot(inst, snap);
    local.violations.insert(local.violations.end(), cert.violations.begin(), cert.violations.end());
    if (i > 0) {
      const PathDifference diff =
          alternating_path_difference(run.snapshots[i - 1].matching, snap.matching);
      if (diff.kind != DifferenceKind::single_path) {
        add(local, constraint::single_path,
            "snapshots " + std::to_string(i - 1) + "->" + std::to_string(i),
            Rational(diff.components.size()), Rational(1));
      }
    }
    for (Violation& v : local.violations) {
      v.cardinality = snap.cardinality;
      verdict.violations.push_back(std::move(v));
    }
  }
  return verdict;
}

}  // namespace blossomcert
