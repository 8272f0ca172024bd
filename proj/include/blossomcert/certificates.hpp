#pragma once

#include "blossomcert/blossom_engine.hpp"
#include "blossomcert/dual_state.hpp"
#include "blossomcert/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blossomcert {

struct DualAccumulation {
  std::vector<Rational> pi_star;  // per node: sum of pi(U) over sets U containing it
  Rational pi_star_max;
};

/// Dual solution of the fixed-cardinality matching LP. `z` is sparse; sets
/// not listed carry 0.
struct CardinalityCertificate {
  std::size_t k = 0;
  Rational gamma;
  std::vector<Rational> y;
  std::vector<OddSet> z;  // OddSet::pi holds z_U
};

/// One failed check with the exact quantities involved.
struct Violation {
  std::string constraint;
  std::string witness;
  Rational lhs;
  Rational rhs;
  std::optional<std::size_t> cardinality;  // snapshot k when raised by verify_run
};

struct Verdict {
  std::vector<Violation> violations;

  bool pass() const noexcept { return violations.empty(); }
  bool has(std::string_view constraint) const;
};

/// Constraint identifiers used in Violation::constraint.
namespace constraint {
inline constexpr std::string_view blossom_nonneg = "blossom_nonneg";      // pi(U) >= 0, |U| >= 3
inline constexpr std::string_view edge_cut = "edge_cut";                  // cut-form edge load <= w
inline constexpr std::string_view edge_set = "edge_set";                  // y_u + y_v + z + gamma <= w
inline constexpr std::string_view y_nonpos = "y_nonpos";
inline constexpr std::string_view z_nonpos = "z_nonpos";
inline constexpr std::string_view cs_tight_edge = "cs_tight_edge";        // matched edge tight
inline constexpr std::string_view cs_exposed_node = "cs_exposed_node";    // y_v < 0 => v matched
inline constexpr std::string_view cs_near_perfect = "cs_near_perfect";    // z_U < 0 => (|U|-1)/2 inside
inline constexpr std::string_view cs_cut_tight = "cs_cut_tight";          // pi(U) > 0 => one edge leaves U
inline constexpr std::string_view single_path = "single_path";
inline constexpr std::string_view snapshot_shape = "snapshot_shape";
inline constexpr std::string_view cardinality = "cardinality";
}  // namespace constraint

DualAccumulation accumulate_duals(const DualState& dual);

/// gamma = 2 max pi*, y_v = pi*(v) - max pi*, z_U = -2 pi(U) on |U| >= 3.
CardinalityCertificate transform_duals(const DualState& dual, std::size_t k);

/// pi(U) >= 0 for |U| >= 3 and, for every edge, the summed value of the sets
/// separating its endpoints is at most its weight.
Verdict check_cut_feasibility(const Instance& inst, const DualState& dual);

/// Dual feasibility plus complementary slackness for the fixed-cardinality
/// LP. A pass proves m has minimum weight among matchings of size |m|.
/// Throws std::invalid_argument when |m| != cert.k.
Verdict check_cardinality_certificate(const Instance& inst, const Matching& m,
                                      const CardinalityCertificate& cert);

/// Certifies one snapshot: its matching against the certificate transformed
/// from its frozen duals at its recorded cardinality. A matching whose size
/// differs from the recorded cardinality is reported as a violation.
Verdict certify_snapshot(const Instance& inst, const Snapshot& snap);

/// Certificate check for every snapshot plus the single-path property
/// between consecutive snapshots.
Verdict verify_run(const Instance& inst, const RunResult& run);

}  // namespace blossomcert
