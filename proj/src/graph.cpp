#include "blossomcert/graph.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace blossomcert {

// --- Instance ----------------------------------------------------------------

std::uint64_t Instance::key(NodeId u, NodeId v) {
  NodePair p(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(p.first)) << 32) |
         static_cast<std::uint32_t>(p.second);
}

Instance::Instance(NodeId node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  if (node_count_ <= 0) throw InstanceError("node count must be positive");
  incidence_.resize(static_cast<std::size_t>(node_count_));
  index_.reserve(edges_.size());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u < 0 || e.u >= node_count_ || e.v < 0 || e.v >= node_count_) {
      throw InstanceError("edge " + std::to_string(i) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InstanceError("edge " + std::to_string(i) + " is a self-loop");
    if (!index_.emplace(key(e.u, e.v), i).second) {
      throw InstanceError("edge " + std::to_string(i) + " duplicates an earlier edge");
    }
    incidence_[e.u].push_back(i);
    incidence_[e.v].push_back(i);
  }
}

std::optional<std::size_t> Instance::find_edge(NodeId u, NodeId v) const {
  if (u == v) return std::nullopt;
  auto it = index_.find(key(u, v));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> Instance::induced_edges(std::span<const NodeId> nodes) const {
  std::vector<char> inside(static_cast<std::size_t>(node_count_), 0);
  for (NodeId v : nodes) inside.at(v) = 1;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (inside[edges_[i].u] && inside[edges_[i].v]) out.push_back(i);
  }
  return out;
}

bool Instance::has_negative_weight() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.weight < 0; });
}

// --- Matching ----------------------------------------------------------------

Matching::Matching(std::vector<NodePair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<NodeId> nodes;
  nodes.reserve(2 * pairs_.size());
  for (const NodePair& p : pairs_) {
    if (p.first == p.second) throw InstanceError("matching contains a self-loop");
    nodes.push_back(p.first);
    nodes.push_back(p.second);
  }
  std::sort(nodes.begin(), nodes.end());
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end()) {
    throw InstanceError("matching edges share a node");
  }
}

bool Matching::contains(NodeId u, NodeId v) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), NodePair(u, v));
}

std::optional<NodeId> Matching::mate(NodeId v) const {
  for (const NodePair& p : pairs_) {
    if (p.first == v) return p.second;
    if (p.second == v) return p.first;
  }
  return std::nullopt;
}

bool Matching::covers(NodeId v) const { return mate(v).has_value(); }

std::size_t Matching::count_inside(std::span<const NodeId> nodes) const {
  auto in = [&](NodeId x) { return std::find(nodes.begin(), nodes.end(), x) != nodes.end(); };
  return static_cast<std::size_t>(std::count_if(
      pairs_.begin(), pairs_.end(), [&](const NodePair& p) { return in(p.first) && in(p.second); }));
}

Rational matching_weight(const Instance& inst, const Matching& m) {
  Rational total = 0;
  for (const NodePair& p : m.pairs()) {
    auto idx = inst.find_edge(p.first, p.second);
    if (!idx) {
      throw InstanceError("matching pair {" + std::to_string(p.first + 1) + "," +
                          std::to_string(p.second + 1) + "} is not an edge");
    }
    total += inst.edge(*idx).weight;
  }
  return total;
}

bool is_matching_of(const Instance& inst, const Matching& m) {
  return std::all_of(m.pairs().begin(), m.pairs().end(), [&](const NodePair& p) {
    return p.second < inst.node_count() && inst.find_edge(p.first, p.second).has_value();
  });
}

NormalizedInstance normalize_weights(const Instance& inst) {
  Rational shift = 0;
  for (const Edge& e : inst.edges()) shift = std::max(shift, Rational(-e.weight));
  std::vector<Edge> edges = inst.edges();
  for (Edge& e : edges) e.weight += shift;
  return NormalizedInstance{Instance(inst.node_count(), std::move(edges)),
                            NormalizationRecord{shift, inst}};
}

// --- symmetric difference ----------------------------------------------------

std::string_view to_string(DifferenceKind kind) {
  switch (kind) {
    case DifferenceKind::single_path: return "single-path";
    case DifferenceKind::connected_other: return "connected-other";
    case DifferenceKind::disconnected: return "disconnected";
  }
  return "?";
}

PathDifference alternating_path_difference(const Matching& a, const Matching& b) {
  std::vector<NodePair> diff;
  std::set_symmetric_difference(a.pairs().begin(), a.pairs().end(), b.pairs().begin(),
                                b.pairs().end(), std::back_inserter(diff));

  std::map<NodeId, std::vector<NodeId>> adj;
  for (const NodePair& p : diff) {
    adj[p.first].push_back(p.second);
    adj[p.second].push_back(p.first);
  }

  // Each node has degree <= 2, so components are paths or cycles. Paths are
  // walked from their smaller endpoint, cycles from their smallest node, which
  // keeps the result independent of argument order.
  std::map<NodeId, bool> seen;
  auto walk = [&](NodeId start) {
    DifferenceComponent comp;
    NodeId prev = -1;
    NodeId cur = start;
    while (true) {
      seen[cur] = true;
      comp.nodes.push_back(cur);
      NodeId next = -1;
      for (NodeId n : adj[cur]) {
        if (n != prev && !seen[n]) {
          next = n;
          break;
        }
      }
      if (next < 0) break;
      prev = cur;
      cur = next;
    }
    return comp;
  };

  PathDifference out;
  for (const auto& [node, nbrs] : adj) {
    if (nbrs.size() == 1 && !seen[node]) {
      DifferenceComponent comp = walk(node);
      comp.is_path = true;
      out.components.push_back(std::move(comp));
    }
  }
  for (const auto& [node, nbrs] : adj) {
    if (!seen[node]) out.components.push_back(walk(node));
  }
  std::sort(out.components.begin(), out.components.end(),
            [](const DifferenceComponent& x, const DifferenceComponent& y) {
              return *std::min_element(x.nodes.begin(), x.nodes.end()) <
                     *std::min_element(y.nodes.begin(), y.nodes.end());
            });

  if (out.components.size() == 1) {
    out.kind = out.components.front().is_path ? DifferenceKind::single_path
                                              : DifferenceKind::connected_other;
  } else {
    out.kind = DifferenceKind::disconnected;
  }
  return out;
}

// --- I/O ---------------------------------------------------------------------

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  std::string t;
  while (ss >> t) tokens.push_back(t);
  return tokens;
}

long long parse_count(const std::string& token, std::size_t line, const char* what) {
  std::size_t pos = 0;
  long long value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != token.size() || token.empty()) {
    throw ParseError(line, std::string("malformed ") + what + " '" + token + "'");
  }
  return value;
}

}  // namespace

Instance parse_instance(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  std::map<NodePair, std::size_t> first_seen;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;

    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "second header line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
      n = parse_count(tokens[2], line_no, "node count");
      m = parse_count(tokens[3], line_no, "edge count");
      if (n <= 0 || m < 0 || n > std::numeric_limits<NodeId>::max()) {
        throw ParseError(line_no, "malformed header, counts out of range");
      }
      have_header = true;
      continue;
    }

    if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before header");
      if (tokens.size() != 4) throw ParseError(line_no, "malformed edge line, expected 'e <u> <v> <w>'");
      long long u = parse_count(tokens[1], line_no, "node id");
      long long v = parse_count(tokens[2], line_no, "node id");
      if (u < 1 || u > n) throw ParseError(line_no, "node id " + tokens[1] + " out of range");
      if (v < 1 || v > n) throw ParseError(line_no, "node id " + tokens[2] + " out of range");
      if (u == v) throw ParseError(line_no, "self-loop at node " + tokens[1]);
      Rational w;
      try {
        w = parse_rational(tokens[3]);
      } catch (const RationalParseError& err) {
        throw ParseError(line_no, err.what());
      }
      NodePair pair(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
      if (auto [it, inserted] = first_seen.emplace(pair, line_no); !inserted) {
        throw ParseError(line_no, "duplicate edge {" + tokens[1] + "," + tokens[2] +
                                      "} (first at line " + std::to_string(it->second) + ")");
      }
      edges.push_back(Edge{pair.first, pair.second, std::move(w)});
      if (static_cast<long long>(edges.size()) > m) {
        throw ParseError(line_no, "more edge lines than the header declares");
      }
      continue;
    }

    throw ParseError(line_no, "unrecognised line type '" + tokens[0] + "'");
  }

  if (!have_header) throw ParseError(line_no, "missing 'p edge' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Instance(static_cast<NodeId>(n), std::move(edges));
}

Instance parse_instance_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_instance(in);
}

void write_instance(std::ostream& out, const Instance& inst) {
  out << "p edge " << inst.node_count() << ' ' << inst.edge_count() << '\n';
  for (const Edge& e : inst.edges()) {
    out << "e " << e.u + 1 << ' ' << e.v + 1 << ' ' << to_string(e.weight) << '\n';
  }
}

std::string format_instance(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

Matching parse_matching(std::istream& in, const Instance& inst) {
  std::string line;
  std::size_t line_no = 0;
  std::vector<NodePair> pairs;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] != "m" || tokens.size() != 3) {
      throw ParseError(line_no, "malformed matching line, expected 'm <u> <v>'");
    }
    long long u = parse_count(tokens[1], line_no, "node id");
    long long v = parse_count(tokens[2], line_no, "node id");
    if (u < 1 || u > inst.node_count() || v < 1 || v > inst.node_count()) {
      throw ParseError(line_no, "node id out of range");
    }
    if (!inst.find_edge(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1))) {
      throw ParseError(line_no, "pair is not an edge of the instance");
    }
    pairs.emplace_back(static_cast<NodeId>(u - 1), static_cast<NodeId>(v - 1));
  }
  try {
    return Matching(std::move(pairs));
  } catch (const InstanceError& err) {
    throw ParseError(line_no, err.what());
  }
}

void write_matching(std::ostream& out, const Matching& m) {
  for (const NodePair& p : m.pairs()) out << "m " << p.first + 1 << ' ' << p.second + 1 << '\n';
}

}  // namespace blossomcert
