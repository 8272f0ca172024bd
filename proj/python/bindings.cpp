// Python surface. Node ids are 1-based, rationals travel as "p/q" strings,
// and structured results are the same JSON documents the CLI prints.

#include "blossomcert/certificates.hpp"
#include "blossomcert/json_io.hpp"
#include "blossomcert/oracle.hpp"
#include "blossomcert/reductions.hpp"
#include "blossomcert/scenario.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <tuple>

namespace py = pybind11;
using namespace blossomcert;

namespace {

using EdgeTuple = std::tuple<NodeId, NodeId, std::string>;

Instance make_instance(NodeId n, const std::vector<EdgeTuple>& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, w] : edges) {
    if (u < 1 || v < 1) throw py::value_error("node ids are 1-based");
    out.push_back(Edge{u - 1, v - 1, parse_rational(w)});
  }
  return Instance(n, std::move(out));
}

std::vector<EdgeTuple> edge_tuples(const Instance& inst) {
  std::vector<EdgeTuple> out;
  for (const Edge& e : inst.edges()) out.emplace_back(e.u + 1, e.v + 1, to_string(e.weight));
  return out;
}

std::string dump(const Json& doc) { return doc.dump(); }

Json load(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw JsonFormatError(e.what());
  }
}

SolveMode parse_mode(const std::string& mode) {
  if (mode == "maximum") return SolveMode::maximum;
  if (mode == "perfect") return SolveMode::perfect;
  throw py::value_error("mode must be 'maximum' or 'perfect'");
}

DualPolicy make_policy(const std::optional<std::vector<std::vector<std::string>>>& phases) {
  if (!phases) return DualPolicy::uniform();
  std::vector<std::vector<Rational>> parsed;
  for (const auto& phase : *phases) {
    std::vector<Rational> amounts;
    for (const auto& a : phase) amounts.push_back(parse_rational(a));
    parsed.push_back(std::move(amounts));
  }
  return DualPolicy::scripted(std::move(parsed));
}

/// Same normalization the CLI applies: the engine runs on shifted weights.
std::string solve_json(const Instance& inst, const std::string& mode,
                       const std::optional<std::vector<std::vector<std::string>>>& phases,
                       const std::string& beta) {
  const NormalizedInstance norm = normalize_weights(inst);
  const RunResult run =
      solve(norm.instance, parse_mode(mode), make_policy(phases), parse_rational(beta));
  return dump(run_document(run, norm.record.shift));
}

std::string verify_json(const Instance& inst, const std::string& run_text) {
  const NormalizedInstance norm = normalize_weights(inst);
  const RunResult run = run_from_json(load(run_text), inst.node_count());
  return dump(to_json(verify_run(norm.instance, run)));
}

py::dict auxiliary(const Instance& inst, const std::string& run_text, std::size_t k) {
  const NormalizedInstance norm = normalize_weights(inst);
  const RunResult run = run_from_json(load(run_text), inst.node_count());
  if (k >= run.snapshots.size()) throw py::index_error("no snapshot with that cardinality");
  const AuxiliaryCompletion comp = build_auxiliary_completion(norm.instance, run.snapshots[k]);
  py::dict out;
  out["instance"] = comp.aux_instance;
  out["matching"] = dump(to_json(comp.extended_matching));
  out["verdict"] = dump(to_json(check_perfect_certificate(comp)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_blossomcert, m) {
  m.doc() = "Edmonds' blossom algorithm with per-cardinality optimality certificates";

  py::register_exception<RationalParseError>(m, "RationalParseError", PyExc_ValueError);
  py::register_exception<InstanceError>(m, "InstanceError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InfeasibleDualUpdate>(m, "InfeasibleDualUpdate", PyExc_ValueError);
  py::register_exception<OracleBudgetError>(m, "OracleBudgetError", PyExc_ValueError);
  py::register_exception<CompletionRefused>(m, "CompletionRefused", PyExc_ValueError);
  py::register_exception<JsonFormatError>(m, "JsonFormatError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&make_instance), py::arg("node_count"), py::arg("edges"))
      .def_property_readonly("node_count", &Instance::node_count)
      .def_property_readonly("edge_count", &Instance::edge_count)
      .def("edges", &edge_tuples)
      .def("__str__", &format_instance)
      .def("__repr__", [](const Instance& inst) {
        return "<Instance n=" + std::to_string(inst.node_count()) +
               " m=" + std::to_string(inst.edge_count()) + ">";
      });

  m.def("parse_instance", [](const std::string& text) { return parse_instance_text(text); });
  m.def("read_instance", &read_instance_file, py::arg("path"));
  m.def("figure2_instance", &figure2_instance);

  m.def("solve", &solve_json, py::arg("instance"), py::arg("mode") = "maximum",
        py::arg("scripted") = std::nullopt, py::arg("beta") = "0");
  m.def("verify", &verify_json, py::arg("instance"), py::arg("run"));
  m.def(
      "oracle",
      [](const Instance& inst, NodeId limit) {
        return dump(to_json(min_weight_by_cardinality(inst, limit)));
      },
      py::arg("instance"), py::arg("limit") = kDefaultOracleLimit);
  m.def(
      "compare_dual_policies",
      [](const Instance& inst, const std::vector<std::string>& amounts) {
        std::vector<Rational> parsed;
        for (const auto& a : amounts) parsed.push_back(parse_rational(a));
        return dump(to_json(compare_dual_policies(inst, parsed)));
      },
      py::arg("instance"), py::arg("amounts"));
  m.def("doubled_graph", &build_doubled_graph, py::arg("instance"));
  m.def(
      "min_perfect_matching_weight",
      [](const Instance& inst) -> std::optional<std::string> {
        const auto w = min_perfect_matching_weight(inst);
        if (!w) return std::nullopt;
        return to_string(*w);
      },
      py::arg("instance"));
  m.def("auxiliary_completion", &auxiliary, py::arg("instance"), py::arg("run"), py::arg("k"));
}
