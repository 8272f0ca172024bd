#pragma once

#include "blossomcert/blossom_engine.hpp"
#include "blossomcert/graph.hpp"
#include "blossomcert/oracle.hpp"

#include <optional>
#include <string>
#include <vector>

namespace blossomcert {

/// Three alternating forests joined by cross edges of weight 3, 5 and 4.
/// Node ids: a1..a3 -> 1..3, b1..b3 -> 4..6, c1..c3 -> 7..9 (1-based). Forest
/// edges {a_i,b_i} and {b_i,c_i} have weight 0; cross edges are {a1,a2} = 3,
/// {a2,a3} = 5, {a1,a3} = 4.
Instance figure2_instance();

struct CardinalityWeight {
  std::size_t k;
  Rational weight;
};

struct ScenarioReport {
  std::vector<CardinalityWeight> uniform_result;
  std::vector<CardinalityWeight> scripted_result;
  std::optional<std::string> scripted_error;  // set when the script was rejected
  std::vector<CardinalityWeight> oracle_minima;
  std::optional<std::size_t> divergence;      // first k with scripted > oracle
};

/// Runs the uniform policy, a one-phase scripted policy with `amounts`
/// (bound to trees by ascending root id), and the oracle. An infeasible
/// script is reported in `scripted_error`, not thrown.
ScenarioReport compare_dual_policies(const Instance& inst, const std::vector<Rational>& amounts);

}  // namespace blossomcert
