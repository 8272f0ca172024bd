#pragma once

#include "blossomcert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace blossomcert {

/// 0-based node index. Files use 1-based ids; conversion happens at the I/O
/// boundary only.
using NodeId = std::int32_t;

struct Edge {
  NodeId u;
  NodeId v;
  Rational weight;
};

/// Unordered node pair stored with first < second.
struct NodePair {
  NodeId first;
  NodeId second;

  NodePair(NodeId a, NodeId b) : first(a < b ? a : b), second(a < b ? b : a) {}

  friend bool operator==(const NodePair&, const NodePair&) = default;
  friend auto operator<=>(const NodePair&, const NodePair&) = default;
};

class InstanceError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Simple undirected graph with exact rational edge weights. Immutable after
/// construction.
class Instance {
 public:
  /// Throws InstanceError on self-loops, duplicate pairs or bad endpoints.
  Instance(NodeId node_count, std::vector<Edge> edges);

  NodeId node_count() const noexcept { return node_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  std::optional<std::size_t> find_edge(NodeId u, NodeId v) const;

  /// delta(v): indices of edges incident to v, ascending.
  std::span<const std::size_t> incident_edges(NodeId v) const { return incidence_.at(v); }

  /// E[U]: indices of edges with both endpoints in `nodes`, ascending.
  std::vector<std::size_t> induced_edges(std::span<const NodeId> nodes) const;

  bool has_negative_weight() const;

 private:
  static std::uint64_t key(NodeId u, NodeId v);

  NodeId node_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Set of pairwise node-disjoint node pairs; membership doubles as the
/// characteristic vector of the matching.
class Matching {
 public:
  Matching() = default;
  /// Throws InstanceError when two pairs share a node or a pair is a loop.
  explicit Matching(std::vector<NodePair> pairs);

  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<NodePair>& pairs() const noexcept { return pairs_; }

  bool contains(NodeId u, NodeId v) const;
  bool covers(NodeId v) const;
  std::optional<NodeId> mate(NodeId v) const;

  /// x(delta(v)): 1 if v is covered, else 0.
  int degree(NodeId v) const { return covers(v) ? 1 : 0; }
  /// x(E[U]) for a node set U.
  std::size_t count_inside(std::span<const NodeId> nodes) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<NodePair> pairs_;  // sorted
};

/// Sum of edge weights; throws InstanceError for a pair that is not an edge.
Rational matching_weight(const Instance& inst, const Matching& m);

/// True iff every pair in m is an edge of inst.
bool is_matching_of(const Instance& inst, const Matching& m);

struct NormalizationRecord {
  Rational shift;     // C = max(0, -min_e w_e)
  Instance original;
};

struct NormalizedInstance {
  Instance instance;
  NormalizationRecord record;
};

/// Adds C = max(0, -min w) to every weight. A matching of size k gains k*C.
NormalizedInstance normalize_weights(const Instance& inst);

enum class DifferenceKind { single_path, connected_other, disconnected };

struct DifferenceComponent {
  std::vector<NodeId> nodes;  // walk order; for a path, from its smaller endpoint
  bool is_path = false;
};

struct PathDifference {
  DifferenceKind kind = DifferenceKind::disconnected;
  std::vector<DifferenceComponent> components;
};

/// Classifies the symmetric difference of two matchings. An empty difference
/// is reported as disconnected with no components.
PathDifference alternating_path_difference(const Matching& a, const Matching& b);

std::string_view to_string(DifferenceKind kind);

// --- file formats ---------------------------------------------------------

/// DIMACS-flavoured edge list: `c` comments, `p edge <n> <m>`, then
/// `e <u> <v> <w>` with 1-based ids and exact weights.
Instance parse_instance(std::istream& in);
Instance parse_instance_text(std::string_view text);
Instance read_instance_file(const std::string& path);

void write_instance(std::ostream& out, const Instance& inst);
std::string format_instance(const Instance& inst);

/// Lines `m <u> <v>` (1-based); pairs must be edges of inst.
Matching parse_matching(std::istream& in, const Instance& inst);
void write_matching(std::ostream& out, const Matching& m);

}  // namespace blossomcert
