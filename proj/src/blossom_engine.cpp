#include "blossomcert/blossom_engine.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace blossomcert {

std::string_view to_string(SolveMode mode) {
  return mode == SolveMode::perfect ? "perfect" : "maximum";
}

std::string_view to_string(RunStatus status) {
  return status == RunStatus::perfect_found ? "perfect-found" : "no-perfect-matching";
}

InfeasibleDualUpdate::InfeasibleDualUpdate(std::string constraint, std::string witness,
                                           Rational lhs, Rational rhs)
    : std::invalid_argument("infeasible dual update: " + constraint + " violated at " + witness +
                            " (" + to_string(lhs) + " > " + to_string(rhs) + ")"),
      constraint_(std::move(constraint)),
      witness_(std::move(witness)),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

InfeasibleDualUpdate::InfeasibleDualUpdate(const std::string& reason)
    : std::invalid_argument("infeasible dual update: " + reason), constraint_("amounts") {}

DualPolicy DualPolicy::scripted(std::vector<std::vector<Rational>> phases) {
  DualPolicy p;
  p.scripted_ = true;
  p.phases_ = std::move(phases);
  return p;
}

namespace {

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

}  // namespace

BlossomEngine::BlossomEngine(const Instance& inst, Rational beta)
    : inst_(inst), beta_(std::move(beta)) {
  if (beta_ < 0) throw std::invalid_argument("beta must be nonnegative");
  for (const Edge& e : inst_.edges()) {
    if (e.weight < 0) {
      throw std::invalid_argument(edge_name(e) + " has negative weight; normalize first");
    }
    if (2 * beta_ > e.weight) {
      throw std::invalid_argument("initial duals infeasible: 2*beta exceeds weight of " +
                                  edge_name(e));
    }
  }
  const NodeId n = inst_.node_count();
  nodes_.resize(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) {
    nodes_[v].vertices = {v};
    nodes_[v].pi = beta_;
    nodes_[v].exit = v;
  }
  refresh();
}

void BlossomEngine::refresh() {
  const NodeId n = inst_.node_count();
  top_.assign(static_cast<std::size_t>(n), -1);
  pi_star_.assign(static_cast<std::size_t>(n), Rational(0));
  for (NodeId v = 0; v < n; ++v) {
    int id = v;
    Rational sum = 0;
    while (true) {
      sum += nodes_[id].pi;
      if (nodes_[id].parent < 0) break;
      id = nodes_[id].parent;
    }
    top_[v] = id;
    pi_star_[v] = std::move(sum);
  }
}

void BlossomEngine::invalidate_forest() {
  forest_valid_ = false;
  last_event_ = ForestEvent{};
}

void BlossomEngine::require_stuck_forest(const char* op) const {
  if (!forest_valid_) {
    throw EngineStateError(std::string(op) + ": forest is not grown");
  }
  if (last_event_.kind != ForestEventKind::none) {
    throw EngineStateError(std::string(op) + ": an augmenting path or blossom is pending");
  }
}

std::vector<int> BlossomEngine::maximal_nodes() const {
  std::vector<int> out;
  for (std::size_t id = 0; id < nodes_.size(); ++id) {
    if (nodes_[id].alive && nodes_[id].parent < 0) out.push_back(static_cast<int>(id));
  }
  std::sort(out.begin(), out.end(),
            [&](int a, int b) { return nodes_[a].vertices.front() < nodes_[b].vertices.front(); });
  return out;
}

std::vector<std::size_t> BlossomEngine::scan_edges(int node) const {
  std::vector<std::size_t> out;
  for (NodeId v : nodes_[node].vertices) {
    auto inc = inst_.incident_edges(v);
    out.insert(out.end(), inc.begin(), inc.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Rational BlossomEngine::boundary_slack(std::size_t edge) const {
  const Edge& e = inst_.edge(edge);
  return e.weight - pi_star_[e.u] - pi_star_[e.v];
}

Rational BlossomEngine::slack(std::size_t edge) const {
  const Edge& e = inst_.edge(edge);
  if (top_[e.u] != top_[e.v]) return boundary_slack(edge);
  // Sets containing both endpoints do not separate them.
  std::vector<int> ancestors;
  for (int id = e.u; id >= 0; id = nodes_[id].parent) ancestors.push_back(id);
  int common = e.v;
  while (std::find(ancestors.begin(), ancestors.end(), common) == ancestors.end()) {
    common = nodes_[common].parent;
  }
  Rational shared = 0;
  for (int id = common; id >= 0; id = nodes_[id].parent) shared += nodes_[id].pi;
  return e.weight - pi_star_[e.u] - pi_star_[e.v] + 2 * shared;
}

ForestEvent BlossomEngine::grow_forest() {
  refresh();
  const std::size_t count = nodes_.size();
  label_.assign(count, Label::free);
  tree_parent_.assign(count, -1);
  parent_edge_.assign(count, {-1, -1});
  tree_index_.assign(count, -1);
  roots_.clear();

  std::deque<int> queue;
  for (int id : maximal_nodes()) {
    if (nodes_[id].partner >= 0) continue;
    tree_index_[id] = static_cast<int>(roots_.size());
    roots_.push_back(id);
    label_[id] = Label::t;
    queue.push_back(id);
  }

  forest_valid_ = true;
  last_event_ = ForestEvent{};
  while (!queue.empty()) {
    const int b = queue.front();
    queue.pop_front();
    for (std::size_t ei : scan_edges(b)) {
      const Edge& e = inst_.edge(ei);
      const NodeId x = top_[e.u] == b ? e.u : e.v;
      const NodeId y = x == e.u ? e.v : e.u;
      const int c = top_[y];
      if (c == b || boundary_slack(ei) != 0) continue;

      switch (label_[c]) {
        case Label::free: {
          const int d = top_[nodes_[c].partner];
          assert(nodes_[d].partner == nodes_[c].exit);
          label_[c] = Label::s;
          tree_parent_[c] = b;
          parent_edge_[c] = {y, x};
          tree_index_[c] = tree_index_[b];
          label_[d] = Label::t;
          tree_parent_[d] = c;
          parent_edge_[d] = {nodes_[c].partner, nodes_[c].exit};
          tree_index_[d] = tree_index_[b];
          queue.push_back(d);
          break;
        }
        case Label::t:
          last_event_.kind = tree_index_[c] != tree_index_[b] ? ForestEventKind::augmenting_path
                                                              : ForestEventKind::blossom;
          last_event_.edge = ei;
          return last_event_;
        case Label::s:
          break;
      }
    }
  }
  return last_event_;
}

AlphaBound BlossomEngine::compute_alpha() const {
  require_stuck_forest("compute_alpha");
  AlphaBound bound;
  auto offer = [&](Rational value, AlphaBinding binding, std::optional<std::size_t> edge,
                   std::vector<NodeId> blossom) {
    if (!bound.alpha || value < *bound.alpha) {
      bound.alpha = std::move(value);
      bound.binding = binding;
      bound.edge = edge;
      bound.blossom = std::move(blossom);
    }
  };

  for (int id : maximal_nodes()) {
    if (label_[id] == Label::s && nodes_[id].vertices.size() >= 3) {
      offer(nodes_[id].pi, AlphaBinding::blossom_dual, std::nullopt, nodes_[id].vertices);
    }
  }
  for (std::size_t ei = 0; ei < inst_.edge_count(); ++ei) {
    const Edge& e = inst_.edge(ei);
    const int a = top_[e.u];
    const int b = top_[e.v];
    if (a == b) continue;
    const Label la = label_[a];
    const Label lb = label_[b];
    if ((la == Label::t && lb == Label::free) || (la == Label::free && lb == Label::t)) {
      offer(boundary_slack(ei), AlphaBinding::tree_to_free_edge, ei, {});
    } else if (la == Label::t && lb == Label::t) {
      offer(boundary_slack(ei) / 2, AlphaBinding::tree_to_tree_edge, ei, {});
    }
  }
  return bound;
}

void BlossomEngine::apply_dual_update(std::span<const Rational> amounts) {
  require_stuck_forest("apply_dual_update");
  if (amounts.size() != roots_.size()) {
    throw InfeasibleDualUpdate("expected " + std::to_string(roots_.size()) +
                               " per-tree amounts, got " + std::to_string(amounts.size()));
  }
  for (const Rational& a : amounts) {
    if (a < 0) throw InfeasibleDualUpdate("negative amount " + to_string(a));
  }

  std::vector<Rational> delta(nodes_.size(), Rational(0));
  for (int id : maximal_nodes()) {
    if (label_[id] == Label::t) delta[id] = amounts[tree_index_[id]];
    if (label_[id] == Label::s) delta[id] = -amounts[tree_index_[id]];
  }

  for (int id : maximal_nodes()) {
    const Node& b = nodes_[id];
    if (b.vertices.size() >= 3 && b.pi + delta[id] < 0) {
      throw InfeasibleDualUpdate("blossom_nonneg", set_name(b.vertices), Rational(0),
                                 b.pi + delta[id]);
    }
  }
  for (std::size_t ei = 0; ei < inst_.edge_count(); ++ei) {
    const Edge& e = inst_.edge(ei);
    const int a = top_[e.u];
    const int b = top_[e.v];
    if (a == b) continue;
    const Rational load = pi_star_[e.u] + pi_star_[e.v] + delta[a] + delta[b];
    if (load > e.weight) throw InfeasibleDualUpdate("edge_cut", edge_name(e), load, e.weight);
  }

  std::vector<int> drained;
  for (int id : maximal_nodes()) {
    nodes_[id].pi += delta[id];
    if (label_[id] == Label::s && nodes_[id].vertices.size() >= 3 && nodes_[id].pi == 0) {
      drained.push_back(id);
    }
  }
  for (int id : drained) deshrink(id);
  invalidate_forest();
  refresh();
}

void BlossomEngine::flip_to_root(int node, NodeId own, NodeId other) {
  while (true) {
    nodes_[node].exit = own;
    nodes_[node].partner = other;
    if (tree_parent_[node] < 0) return;
    const int s = tree_parent_[node];
    const auto [s_vertex, p_vertex] = parent_edge_[s];
    nodes_[s].exit = s_vertex;
    nodes_[s].partner = p_vertex;
    node = tree_parent_[s];
    own = p_vertex;
    other = s_vertex;
  }
}

void BlossomEngine::augment(std::size_t edge) {
  if (!forest_valid_) throw EngineStateError("augment: forest is not grown");
  const Edge& e = inst_.edge(edge);
  const int a = top_[e.u];
  const int b = top_[e.v];
  if (a == b || label_[a] != Label::t || label_[b] != Label::t ||
      tree_index_[a] == tree_index_[b] || boundary_slack(edge) != 0) {
    throw EngineStateError("augment: " + edge_name(e) +
                           " does not join two trees through a tight edge");
  }
  flip_to_root(a, e.u, e.v);
  flip_to_root(b, e.v, e.u);
  invalidate_forest();
}

void BlossomEngine::shrink_blossom(std::size_t edge) {
  if (!forest_valid_) throw EngineStateError("shrink_blossom: forest is not grown");
  const Edge& e = inst_.edge(edge);
  const int bx = top_[e.u];
  const int by = top_[e.v];
  if (bx == by || label_[bx] != Label::t || label_[by] != Label::t ||
      tree_index_[bx] != tree_index_[by] || boundary_slack(edge) != 0) {
    throw EngineStateError("shrink_blossom: " + edge_name(e) +
                           " does not close an odd cycle within one tree");
  }

  std::vector<int> up_x;  // bx, parent, ..., root
  for (int id = bx; id >= 0; id = tree_parent_[id]) up_x.push_back(id);
  std::vector<int> up_y;  // by, ... up to (excluding) the base
  int base = by;
  while (std::find(up_x.begin(), up_x.end(), base) == up_x.end()) {
    up_y.push_back(base);
    base = tree_parent_[base];
  }

  // Cycle order: base, down the tree to by, across the edge to bx, then up
  // the tree back to the base.
  Node blossom;
  blossom.children.push_back(base);
  for (auto it = up_y.rbegin(); it != up_y.rend(); ++it) {
    const auto [own, parent_side] = parent_edge_[*it];
    blossom.cycle_edges.emplace_back(parent_side, own);
    blossom.children.push_back(*it);
  }
  blossom.cycle_edges.emplace_back(e.v, e.u);
  for (int id : up_x) {
    if (id == base) break;
    blossom.children.push_back(id);
    blossom.cycle_edges.push_back(parent_edge_[id]);
  }
  assert(blossom.children.size() == blossom.cycle_edges.size());
  assert(blossom.children.size() % 2 == 1);

  for (int child : blossom.children) {
    const auto& vs = nodes_[child].vertices;
    blossom.vertices.insert(blossom.vertices.end(), vs.begin(), vs.end());
  }
  std::sort(blossom.vertices.begin(), blossom.vertices.end());
  blossom.pi = 0;
  blossom.exit = nodes_[base].exit;
  blossom.partner = nodes_[base].partner;

  const int id = static_cast<int>(nodes_.size());
  for (int child : blossom.children) nodes_[child].parent = id;
  nodes_.push_back(std::move(blossom));
  invalidate_forest();
  refresh();
}

int BlossomEngine::child_containing(const Node& b, NodeId v) const {
  for (std::size_t i = 0; i < b.children.size(); ++i) {
    const auto& vs = nodes_[b.children[i]].vertices;
    if (std::binary_search(vs.begin(), vs.end(), v)) return static_cast<int>(i);
  }
  throw EngineStateError("vertex not inside blossom");
}

void BlossomEngine::deshrink(int id) {
  Node& b = nodes_[id];
  const std::size_t len = b.children.size();
  const std::size_t j = static_cast<std::size_t>(child_containing(b, b.exit));

  Node& entry = nodes_[b.children[j]];
  entry.exit = b.exit;
  entry.partner = b.partner;
  for (std::size_t i = 0; i + 1 < len; i += 2) {
    const std::size_t first = (j + 1 + i) % len;
    const std::size_t second = (first + 1) % len;
    const auto [xa, xb] = b.cycle_edges[first];
    nodes_[b.children[first]].exit = xa;
    nodes_[b.children[first]].partner = xb;
    nodes_[b.children[second]].exit = xb;
    nodes_[b.children[second]].partner = xa;
  }
  for (int child : b.children) nodes_[child].parent = -1;
  b.alive = false;
  b.children.clear();
  b.cycle_edges.clear();
}

void BlossomEngine::expand(int id, NodeId exit, std::vector<NodePair>& out) const {
  const Node& b = nodes_[id];
  if (b.children.empty()) return;
  const std::size_t len = b.children.size();
  const std::size_t j = static_cast<std::size_t>(child_containing(b, exit));
  expand(b.children[j], exit, out);
  for (std::size_t i = 0; i + 1 < len; i += 2) {
    const std::size_t first = (j + 1 + i) % len;
    const std::size_t second = (first + 1) % len;
    const auto [xa, xb] = b.cycle_edges[first];
    out.emplace_back(xa, xb);
    expand(b.children[first], xa, out);
    expand(b.children[second], xb, out);
  }
}

Matching BlossomEngine::lift_matching() const {
  std::vector<NodePair> pairs;
  for (int id : maximal_nodes()) {
    const Node& b = nodes_[id];
    if (b.partner >= 0 && b.exit < b.partner) pairs.emplace_back(b.exit, b.partner);
    expand(id, b.exit, pairs);
  }
  return Matching(std::move(pairs));
}

DualState BlossomEngine::dual_state() const {
  DualState state;
  state.beta = beta_;
  const NodeId n = inst_.node_count();
  state.singleton_pi.reserve(static_cast<std::size_t>(n));
  for (NodeId v = 0; v < n; ++v) state.singleton_pi.push_back(nodes_[v].pi);
  for (std::size_t id = static_cast<std::size_t>(n); id < nodes_.size(); ++id) {
    if (nodes_[id].alive) state.blossoms.push_back(OddSet{nodes_[id].vertices, nodes_[id].pi});
  }
  return state;
}

std::vector<std::size_t> BlossomEngine::view_index() const {
  std::vector<std::size_t> index(nodes_.size(), 0);
  const auto tops = maximal_nodes();
  for (std::size_t i = 0; i < tops.size(); ++i) index[tops[i]] = i;
  return index;
}

ShrunkenView BlossomEngine::shrunken_view() const {
  ShrunkenView view;
  const auto index = view_index();
  for (int id : maximal_nodes()) view.nodes.push_back(nodes_[id].vertices);
  for (std::size_t ei = 0; ei < inst_.edge_count(); ++ei) {
    const Edge& e = inst_.edge(ei);
    if (top_[e.u] == top_[e.v] || boundary_slack(ei) != 0) continue;
    view.edges.push_back({index[top_[e.u]], index[top_[e.v]], ei});
  }
  return view;
}

ForestLabels BlossomEngine::forest() const {
  if (!forest_valid_) throw EngineStateError("forest: forest is not grown");
  ForestLabels out;
  const auto index = view_index();
  for (int id : maximal_nodes()) {
    out.label.push_back(label_[id]);
    out.parent.push_back(tree_parent_[id] >= 0 ? std::optional<std::size_t>(index[tree_parent_[id]])
                                               : std::nullopt);
    out.tree.push_back(tree_index_[id] >= 0 ? std::optional<std::size_t>(tree_index_[id])
                                            : std::nullopt);
  }
  for (int r : roots_) out.roots.push_back(index[r]);
  return out;
}

std::size_t BlossomEngine::tree_count() const {
  if (!forest_valid_) throw EngineStateError("tree_count: forest is not grown");
  return roots_.size();
}

std::vector<NodeId> BlossomEngine::exposed_vertices() const {
  std::vector<NodeId> out;
  for (int id : maximal_nodes()) {
    if (nodes_[id].partner < 0) out.push_back(nodes_[id].exit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t BlossomEngine::cardinality() const {
  return (static_cast<std::size_t>(inst_.node_count()) - exposed_vertices().size()) / 2;
}

// --- driver --------------------------------------------------------------

namespace {

Snapshot take_snapshot(const BlossomEngine& engine) {
  Snapshot snap;
  snap.matching = engine.lift_matching();
  snap.cardinality = snap.matching.size();
  snap.duals = engine.dual_state();
  snap.weight = matching_weight(engine.instance(), snap.matching);
  return snap;
}

void record(RunResult& run, const SolveOptions& options, const BlossomEngine& engine,
            PhaseKind kind, std::vector<Rational> amounts = {}) {
  if (!options.record_trace) return;
  run.trace.push_back(PhaseRecord{kind, engine.cardinality(), std::move(amounts),
                                  engine.exposed_vertices(), engine.lift_matching(),
                                  engine.dual_state()});
}

}  // namespace

RunResult solve(const Instance& inst, SolveMode mode, const DualPolicy& policy,
                const Rational& beta, const SolveOptions& options) {
  BlossomEngine engine(inst, beta);
  RunResult run;
  run.mode = mode;
  run.snapshots.push_back(take_snapshot(engine));

  std::size_t phase = 0;
  while (true) {
    if (engine.exposed_vertices().empty()) {
      run.status = RunStatus::perfect_found;
      break;
    }
    const ForestEvent event = engine.grow_forest();
    if (event.kind == ForestEventKind::augmenting_path) {
      engine.augment(event.edge);
      run.snapshots.push_back(take_snapshot(engine));
      record(run, options, engine, PhaseKind::augment);
      continue;
    }
    if (event.kind == ForestEventKind::blossom) {
      engine.shrink_blossom(event.edge);
      record(run, options, engine, PhaseKind::shrink);
      continue;
    }

    std::vector<Rational> amounts;
    if (!policy.is_uniform() && phase < policy.phases().size()) {
      amounts = policy.phases()[phase];
    } else {
      const AlphaBound bound = engine.compute_alpha();
      if (!bound.alpha) {
        run.status = RunStatus::no_perfect_matching;
        break;
      }
      amounts.assign(engine.tree_count(), *bound.alpha);
    }
    engine.apply_dual_update(amounts);
    ++phase;
    record(run, options, engine, PhaseKind::dual_update, std::move(amounts));
  }

  run.final_index = run.snapshots.size() - 1;
  return run;
}

}  // namespace blossomcert
