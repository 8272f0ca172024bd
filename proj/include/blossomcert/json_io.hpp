#pragma once

#include "blossomcert/blossom_engine.hpp"
#include "blossomcert/certificates.hpp"
#include "blossomcert/oracle.hpp"
#include "blossomcert/scenario.hpp"

#include "json.hpp"

#include <stdexcept>

namespace blossomcert {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All node ids are 1-based in JSON; rationals are strings "n" or "p/q".

Json to_json(const Rational& value);
Json to_json(const Matching& m);
Json to_json(const DualState& duals);
Json to_json(const CardinalityCertificate& cert);
/// Snapshot with its transformed certificate.
Json to_json(const Snapshot& snap);
Json to_json(const RunResult& run);
Json to_json(const Verdict& verdict);
Json to_json(const OracleTable& table);
Json to_json(const ScenarioReport& report);

/// Run document for an instance whose weights were shifted by `shift` before
/// solving: adds "shift" and, per snapshot, "original_weight" = weight - k*shift.
Json run_document(const RunResult& run, const Rational& shift);

/// Reads back the snapshot schema written by to_json(RunResult). Certificates
/// in the file are ignored; they are always rebuilt from the duals.
RunResult run_from_json(const Json& doc, NodeId node_count);

}  // namespace blossomcert
