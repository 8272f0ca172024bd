#include "blossomcert/json_io.hpp"

#include <algorithm>

namespace blossomcert {
namespace {

Json node_list(const std::vector<NodeId>& nodes) {
  Json out = Json::array();
  for (NodeId v : nodes) out.push_back(v + 1);
  return out;
}

Json node_map(const std::vector<Rational>& values) {
  Json out = Json::object();
  for (std::size_t v = 0; v < values.size(); ++v) out[std::to_string(v + 1)] = to_json(values[v]);
  return out;
}

Json weights(const std::vector<CardinalityWeight>& entries) {
  Json out = Json::array();
  for (const auto& e : entries) out.push_back(Json{{"k", e.k}, {"weight", to_json(e.weight)}});
  return out;
}

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) throw JsonFormatError(std::string(what) + " must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const RationalParseError& err) {
    throw JsonFormatError(std::string(what) + ": " + err.what());
  }
}

NodeId node_field(const Json& j, NodeId node_count) {
  if (!j.is_number_integer()) throw JsonFormatError("node id must be an integer");
  const auto id = j.get<long long>();
  if (id < 1 || id > node_count) throw JsonFormatError("node id out of range");
  return static_cast<NodeId>(id - 1);
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw JsonFormatError(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

}  // namespace

Json to_json(const Rational& value) { return to_string(value); }

Json to_json(const Matching& m) {
  Json out = Json::array();
  for (const NodePair& p : m.pairs()) out.push_back(Json::array({p.first + 1, p.second + 1}));
  return out;
}

Json to_json(const DualState& duals) {
  Json blossoms = Json::array();
  for (const OddSet& u : duals.blossoms) {
    blossoms.push_back(Json{{"nodes", node_list(u.nodes)}, {"pi", to_json(u.pi)}});
  }
  return Json{{"singletons", node_map(duals.singleton_pi)}, {"blossoms", std::move(blossoms)}};
}

Json to_json(const CardinalityCertificate& cert) {
  Json z = Json::array();
  for (const OddSet& u : cert.z) z.push_back(Json{{"nodes", node_list(u.nodes)}, {"value", to_json(u.pi)}});
  return Json{{"gamma", to_json(cert.gamma)}, {"y", node_map(cert.y)}, {"z", std::move(z)}};
}

Json to_json(const Snapshot& snap) {
  return Json{{"k", snap.cardinality},
              {"weight", to_json(snap.weight)},
              {"matching", to_json(snap.matching)},
              {"duals", to_json(snap.duals)},
              {"certificate", to_json(transform_duals(snap.duals, snap.cardinality))}};
}

Json to_json(const RunResult& run) {
  Json snaps = Json::array();
  for (const Snapshot& s : run.snapshots) snaps.push_back(to_json(s));
  return Json{{"status", std::string(to_string(run.status))},
              {"mode", std::string(to_string(run.mode))},
              {"snapshots", std::move(snaps)}};
}

Json to_json(const Verdict& verdict) {
  Json violations = Json::array();
  for (const Violation& v : verdict.violations) {
    Json item{{"constraint", v.constraint},
              {"witness", v.witness},
              {"lhs", to_json(v.lhs)},
              {"rhs", to_json(v.rhs)}};
    if (v.cardinality) item["k"] = *v.cardinality;
    violations.push_back(std::move(item));
  }
  return Json{{"pass", verdict.pass()}, {"violations", std::move(violations)}};
}

Json to_json(const OracleTable& table) {
  Json rows = Json::array();
  for (const OracleEntry& e : table.by_cardinality) {
    rows.push_back(Json{{"k", e.k}, {"min_weight", to_json(e.min_weight)}, {"witness", to_json(e.witness)}});
  }
  return Json{{"nu", table.nu}, {"by_cardinality", std::move(rows)}};
}

Json to_json(const ScenarioReport& report) {
  Json out{{"uniform", weights(report.uniform_result)},
           {"scripted", weights(report.scripted_result)},
           {"scripted_error", report.scripted_error ? Json(*report.scripted_error) : Json(nullptr)},
           {"oracle", weights(report.oracle_minima)},
           {"divergence", nullptr}};
  if (report.divergence) {
    const std::size_t k = *report.divergence;
    out["divergence"] = Json{{"k", k},
                             {"scripted_weight", to_json(report.scripted_result.at(k).weight)},
                             {"oracle_weight", to_json(report.oracle_minima.at(k).weight)}};
  }
  return out;
}

Json run_document(const RunResult& run, const Rational& shift) {
  Json doc = to_json(run);
  doc["shift"] = to_json(shift);
  Json& snaps = doc["snapshots"];
  for (std::size_t i = 0; i < run.snapshots.size(); ++i) {
    const Snapshot& s = run.snapshots[i];
    snaps[i]["original_weight"] = to_json(s.weight - Rational(s.cardinality) * shift);
  }
  return doc;
}

RunResult run_from_json(const Json& doc, NodeId node_count) {
  RunResult run;
  const std::string status = member(doc, "status").get<std::string>();
  if (status == "perfect-found") {
    run.status = RunStatus::perfect_found;
  } else if (status == "no-perfect-matching") {
    run.status = RunStatus::no_perfect_matching;
  } else {
    throw JsonFormatError("unknown status '" + status + "'");
  }
  if (doc.contains("mode")) {
    run.mode = doc.at("mode").get<std::string>() == "perfect" ? SolveMode::perfect : SolveMode::maximum;
  }

  const Json& snaps = member(doc, "snapshots");
  if (!snaps.is_array() || snaps.empty()) throw JsonFormatError("snapshots must be a non-empty array");
  for (const Json& js : snaps) {
    Snapshot snap;
    snap.cardinality = member(js, "k").get<std::size_t>();
    snap.weight = rational_field(member(js, "weight"), "weight");

    std::vector<NodePair> pairs;
    for (const Json& p : member(js, "matching")) {
      if (!p.is_array() || p.size() != 2) throw JsonFormatError("matching entries are [u, v] pairs");
      pairs.emplace_back(node_field(p[0], node_count), node_field(p[1], node_count));
    }
    try {
      snap.matching = Matching(std::move(pairs));
    } catch (const InstanceError& err) {
      throw JsonFormatError(err.what());
    }

    const Json& duals = member(js, "duals");
    snap.duals.singleton_pi.assign(static_cast<std::size_t>(node_count), Rational(0));
    for (const auto& [key, value] : member(duals, "singletons").items()) {
      NodeId v = 0;
      try {
        v = node_field(Json(std::stoll(key)), node_count);
      } catch (const std::logic_error&) {
        throw JsonFormatError("bad singleton key '" + key + "'");
      }
      snap.duals.singleton_pi[v] = rational_field(value, "singleton pi");
    }
    for (const Json& b : member(duals, "blossoms")) {
      OddSet u;
      for (const Json& v : member(b, "nodes")) u.nodes.push_back(node_field(v, node_count));
      std::sort(u.nodes.begin(), u.nodes.end());
      u.pi = rational_field(member(b, "pi"), "blossom pi");
      snap.duals.blossoms.push_back(std::move(u));
    }
    run.snapshots.push_back(std::move(snap));
  }
  run.final_index = run.snapshots.size() - 1;
  return run;
}

}  // namespace blossomcert
