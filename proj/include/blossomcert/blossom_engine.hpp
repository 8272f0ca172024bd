#pragma once

#include "blossomcert/dual_state.hpp"
#include "blossomcert/graph.hpp"
#include "blossomcert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace blossomcert {

enum class SolveMode { perfect, maximum };
enum class RunStatus { perfect_found, no_perfect_matching };

std::string_view to_string(SolveMode mode);
std::string_view to_string(RunStatus status);

/// Forest label of a shrunken node. Roots (exposed nodes) and every node at
/// even alternating distance from a root carry `t`; odd distance carries `s`.
/// Dual values grow on `t` nodes and shrink on `s` nodes.
enum class Label : std::uint8_t { free, s, t };

/// Tight-edge graph with every maximal blossom contracted to one node.
struct ShrunkenView {
  struct ViewEdge {
    std::size_t a;
    std::size_t b;
    std::size_t edge;  // index into Instance::edges()
  };
  std::vector<std::vector<NodeId>> nodes;  // ordered by smallest member
  std::vector<ViewEdge> edges;
};

/// Labels of the alternating forest, indexed like ShrunkenView::nodes.
struct ForestLabels {
  std::vector<Label> label;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::optional<std::size_t>> tree;  // position in `roots`
  std::vector<std::size_t> roots;                // ascending smallest member
};

enum class ForestEventKind { augmenting_path, blossom, none };

struct ForestEvent {
  ForestEventKind kind = ForestEventKind::none;
  std::size_t edge = 0;  // the tight edge joining two `t` nodes
};

enum class AlphaBinding { unbounded, blossom_dual, tree_to_free_edge, tree_to_tree_edge };

struct AlphaBound {
  std::optional<Rational> alpha;  // nullopt when no constraint limits the update
  AlphaBinding binding = AlphaBinding::unbounded;
  std::optional<std::size_t> edge;
  std::vector<NodeId> blossom;
};

class EngineStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a requested dual update would break dual feasibility. The
/// engine state is left untouched.
class InfeasibleDualUpdate : public std::invalid_argument {
 public:
  InfeasibleDualUpdate(std::string constraint, std::string witness, Rational lhs, Rational rhs);
  explicit InfeasibleDualUpdate(const std::string& reason);

  const std::string& constraint() const noexcept { return constraint_; }
  const std::string& witness() const noexcept { return witness_; }
  const Rational& lhs() const noexcept { return lhs_; }
  const Rational& rhs() const noexcept { return rhs_; }

 private:
  std::string constraint_;
  std::string witness_;
  Rational lhs_;
  Rational rhs_;
};

/// Either the same update for every tree, or a scripted list of per-tree
/// amounts, one list per dual-update phase. Phases past the end of the script
/// fall back to uniform updates.
class DualPolicy {
 public:
  static DualPolicy uniform() { return DualPolicy{}; }
  static DualPolicy scripted(std::vector<std::vector<Rational>> phases);

  bool is_uniform() const noexcept { return !scripted_; }
  const std::vector<std::vector<Rational>>& phases() const noexcept { return phases_; }

 private:
  bool scripted_ = false;
  std::vector<std::vector<Rational>> phases_;
};

struct Snapshot {
  std::size_t cardinality = 0;
  Matching matching;
  DualState duals;
  Rational weight;
};

enum class PhaseKind { augment, shrink, dual_update };

/// Engine state right after one step. Only recorded when requested.
struct PhaseRecord {
  PhaseKind kind;
  std::size_t cardinality;
  std::vector<Rational> amounts;  // per tree, dual updates only
  std::vector<NodeId> exposed;
  Matching matching;
  DualState duals;
};

struct RunResult {
  SolveMode mode = SolveMode::maximum;
  RunStatus status = RunStatus::perfect_found;
  std::vector<Snapshot> snapshots;  // cardinalities 0, 1, ..., K
  std::size_t final_index = 0;
  std::vector<PhaseRecord> trace;

  /// Perfect mode was requested and no perfect matching exists.
  bool infeasible() const {
    return mode == SolveMode::perfect && status == RunStatus::no_perfect_matching;
  }
  const Snapshot& final_snapshot() const { return snapshots.at(final_index); }
};

struct SolveOptions {
  bool record_trace = false;
};

/// Primal-dual blossom algorithm over a fixed instance.
///
/// The engine keeps the matching of the shrunken graph plus, per maximal
/// blossom, the vertex through which it is matched (or exposed). The matching
/// on the original graph is recovered by expanding blossom interiors along
/// their stored odd cycles. Each step regrows the alternating forest from
/// scratch, scanning nodes in queue order from the roots (ascending smallest
/// vertex) and each node's incident edges in input order.
///
/// The instance must outlive the engine.
class BlossomEngine {
 public:
  /// Singletons start at `beta`; throws std::invalid_argument on negative
  /// weights or when 2*beta exceeds some edge weight.
  BlossomEngine(const Instance& inst, Rational beta);

  const Instance& instance() const noexcept { return inst_; }

  /// Rebuilds the forest and reports the first event in scan order.
  ForestEvent grow_forest();

  /// Largest uniform update keeping the duals feasible. Requires a fully
  /// grown forest with no event.
  AlphaBound compute_alpha() const;

  /// Adds amounts[i] to `t` nodes and subtracts it from `s` nodes of tree i,
  /// then deshrinks every maximal `s` blossom whose value dropped to zero.
  /// Throws InfeasibleDualUpdate (state unchanged) when the amounts would
  /// break feasibility, are negative, or do not match the tree count.
  void apply_dual_update(std::span<const Rational> amounts);

  /// Augments along the forest paths joined by `edge`.
  void augment(std::size_t edge);

  /// Contracts the odd cycle closed by `edge` into a new blossom with value 0.
  void shrink_blossom(std::size_t edge);

  Matching lift_matching() const;
  DualState dual_state() const;
  ShrunkenView shrunken_view() const;
  ForestLabels forest() const;

  std::size_t tree_count() const;
  std::size_t cardinality() const;
  std::vector<NodeId> exposed_vertices() const;

  /// w_e minus the dual values of all sets separating the endpoints.
  Rational slack(std::size_t edge) const;

 private:
  struct Node {
    std::vector<int> children;  // odd cycle; children[0] was the base at creation
    std::vector<std::pair<NodeId, NodeId>> cycle_edges;  // joins children[i] -> children[i+1]
    std::vector<NodeId> vertices;                         // sorted
    Rational pi;
    int parent = -1;
    bool alive = true;
    NodeId exit = -1;     // vertex matched outside, or the exposed vertex
    NodeId partner = -1;  // other end of the external matched edge
  };

  void refresh();
  void invalidate_forest();
  void require_stuck_forest(const char* op) const;
  std::vector<int> maximal_nodes() const;
  std::vector<std::size_t> scan_edges(int node) const;
  Rational boundary_slack(std::size_t edge) const;  // endpoints in distinct maximal nodes
  void flip_to_root(int node, NodeId own, NodeId other);
  void deshrink(int id);
  void expand(int id, NodeId exit, std::vector<NodePair>& out) const;
  int child_containing(const Node& b, NodeId v) const;
  std::vector<std::size_t> view_index() const;

  const Instance& inst_;
  Rational beta_;
  std::vector<Node> nodes_;  // [0, n) are the singletons
  std::vector<int> top_;     // maximal node containing each vertex
  std::vector<Rational> pi_star_;

  std::vector<Label> label_;
  std::vector<int> tree_parent_;
  std::vector<std::pair<NodeId, NodeId>> parent_edge_;  // (vertex in node, vertex in parent)
  std::vector<int> tree_index_;
  std::vector<int> roots_;
  bool forest_valid_ = false;
  ForestEvent last_event_;
};

/// Runs the algorithm from the empty matching, recording a snapshot at every
/// cardinality. Requires nonnegative weights and beta >= 0. Throws
/// InfeasibleDualUpdate when a scripted phase is infeasible.
RunResult solve(const Instance& inst, SolveMode mode = SolveMode::maximum,
                const DualPolicy& policy = DualPolicy::uniform(), const Rational& beta = 0,
                const SolveOptions& options = {});

}  // namespace blossomcert
