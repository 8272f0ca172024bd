// Properties over the fixed random suite. Oracle tables are computed once and
// shared by every test in this file.

#include "blossomcert/certificates.hpp"
#include "blossomcert/oracle.hpp"
#include "blossomcert/reductions.hpp"

#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

namespace blossomcert {
namespace {

struct Case {
  testing::GeneratedInstance source;
  NormalizedInstance norm;
  OracleTable table;  // on the normalized instance
  RunResult run;      // uniform, traced
};

const std::vector<Case>& cases() {
  static const std::vector<Case> all = [] {
    std::vector<Case> out;
    for (auto& g : testing::random_suite()) {
      NormalizedInstance norm = normalize_weights(g.instance);
      OracleTable table = min_weight_by_cardinality(norm.instance);
      RunResult run = solve(norm.instance, SolveMode::maximum, DualPolicy::uniform(), 0,
                            SolveOptions{.record_trace = true});
      out.push_back(Case{std::move(g), std::move(norm), std::move(table), std::move(run)});
    }
    return out;
  }();
  return all;
}

/// Random matching built greedily from a shuffled edge order.
Matching random_matching(const Instance& inst, std::mt19937_64& rng, std::size_t max_size) {
  std::vector<std::size_t> order(inst.edge_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<bool> used(static_cast<std::size_t>(inst.node_count()), false);
  std::vector<NodePair> pairs;
  for (std::size_t ei : order) {
    if (pairs.size() == max_size) break;
    const Edge& e = inst.edge(ei);
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    pairs.emplace_back(e.u, e.v);
  }
  return Matching(std::move(pairs));
}

Rational cut_load(const DualState& d, const DualAccumulation& acc, const Edge& e) {
  Rational load = acc.pi_star[e.u] + acc.pi_star[e.v];
  for (const OddSet& u : d.blossoms) {
    if (u.contains(e.u) && u.contains(e.v)) load -= 2 * u.pi;
  }
  return load;
}

bool half_integral(const Rational& r) { return is_integer(2 * r); }

TEST(Properties, NormalizationPreservesOptimaPerCardinality) {
  std::mt19937_64 rng(7);
  for (const Case& c : cases()) {
    const Instance& original = c.source.instance;
    if (original.node_count() > 10) continue;
    const OracleTable raw = min_weight_by_cardinality(original);
    const Rational& shift = c.norm.record.shift;
    ASSERT_EQ(raw.nu, c.table.nu);
    for (std::size_t k = 0; k <= raw.nu; ++k) {
      EXPECT_EQ(c.table.at(k).min_weight, raw.at(k).min_weight + Rational(k) * shift);
      // The normalized argmin is still optimal on the original weights.
      EXPECT_EQ(matching_weight(original, c.table.at(k).witness), raw.at(k).min_weight);
    }
    const Matching m = random_matching(original, rng, original.edge_count());
    EXPECT_EQ(matching_weight(c.norm.instance, m),
              matching_weight(original, m) + Rational(m.size()) * shift);
  }
}

TEST(Properties, PathDifferenceIsSymmetric) {
  std::mt19937_64 rng(11);
  for (const Case& c : cases()) {
    const Matching a = random_matching(c.norm.instance, rng, c.norm.instance.edge_count());
    const Matching b = random_matching(c.norm.instance, rng, c.norm.instance.edge_count());
    const PathDifference ab = alternating_path_difference(a, b);
    const PathDifference ba = alternating_path_difference(b, a);
    ASSERT_EQ(ab.kind, ba.kind);
    ASSERT_EQ(ab.components.size(), ba.components.size());
    for (std::size_t i = 0; i < ab.components.size(); ++i) {
      EXPECT_EQ(ab.components[i].nodes, ba.components[i].nodes);
    }
  }
}

TEST(Properties, EngineInvariantsHoldAfterEveryStep) {
  std::size_t phases = 0;
  std::size_t blossom_steps = 0;
  for (const Case& c : cases()) {
    const Instance& inst = c.norm.instance;
    for (const PhaseRecord& rec : c.run.trace) {
      ++phases;
      const DualState& d = rec.duals;
      ASSERT_TRUE(d.structural_problem().empty()) << c.source.label << ": "
                                                  << d.structural_problem();
      EXPECT_TRUE(check_cut_feasibility(inst, d).pass()) << c.source.label;
      const DualAccumulation acc = accumulate_duals(d);

      for (const NodePair& p : rec.matching.pairs()) {
        const Edge& e = inst.edge(*inst.find_edge(p.first, p.second));
        EXPECT_EQ(cut_load(d, acc, e), e.weight) << c.source.label;
      }
      for (const OddSet& u : d.blossoms) {
        ++blossom_steps;
        if (u.pi > 0) EXPECT_EQ(rec.matching.count_inside(u.nodes), (u.nodes.size() - 1) / 2);
      }
      for (NodeId v : rec.exposed) {
        EXPECT_FALSE(rec.matching.covers(v));
        EXPECT_EQ(acc.pi_star[v], acc.pi_star_max) << c.source.label;
      }
      for (const Rational& pi : d.singleton_pi) EXPECT_TRUE(half_integral(pi)) << to_string(pi);
      for (const OddSet& u : d.blossoms) EXPECT_TRUE(half_integral(u.pi)) << to_string(u.pi);
    }
  }
  EXPECT_GT(phases, 1000u);
  EXPECT_GT(blossom_steps, 0u);
}

TEST(Properties, SuiteExercisesDeshrinking) {
  std::size_t deshrinks = 0;
  for (const Case& c : cases()) {
    for (std::size_t i = 1; i < c.run.trace.size(); ++i) {
      const auto& prev = c.run.trace[i - 1].duals.blossoms;
      const auto& cur = c.run.trace[i].duals.blossoms;
      if (c.run.trace[i].kind == PhaseKind::dual_update && cur.size() < prev.size()) ++deshrinks;
    }
  }
  EXPECT_GT(deshrinks, 0u);
}

TEST(Properties, SnapshotsGrowAlongSinglePaths) {
  for (const Case& c : cases()) {
    const auto& snaps = c.run.snapshots;
    for (std::size_t k = 0; k < snaps.size(); ++k) {
      EXPECT_EQ(snaps[k].cardinality, k);
      EXPECT_EQ(snaps[k].matching.size(), k);
      if (k == 0) continue;
      EXPECT_EQ(alternating_path_difference(snaps[k - 1].matching, snaps[k].matching).kind,
                DifferenceKind::single_path)
          << c.source.label << " k=" << k;
      for (NodeId v = 0; v < c.norm.instance.node_count(); ++v) {
        if (snaps[k - 1].matching.covers(v)) EXPECT_TRUE(snaps[k].matching.covers(v));
      }
    }
  }
}

TEST(Properties, SnapshotWeightsMatchOracle) {
  for (const Case& c : cases()) {
    const auto& snaps = c.run.snapshots;
    ASSERT_EQ(snaps.size() - 1, c.table.nu) << c.source.label;
    for (std::size_t k = 0; k < snaps.size(); ++k) {
      EXPECT_EQ(snaps[k].weight, c.table.at(k).min_weight) << c.source.label << " k=" << k;
    }
    const bool perfect = 2 * c.table.nu == static_cast<std::size_t>(c.norm.instance.node_count());
    EXPECT_EQ(c.run.status, perfect ? RunStatus::perfect_found : RunStatus::no_perfect_matching);
  }
}

TEST(Properties, EdgeIdentityLinksBothDualForms) {
  for (const Case& c : cases()) {
    const Instance& inst = c.norm.instance;
    for (const Snapshot& snap : c.run.snapshots) {
      const CardinalityCertificate cert = transform_duals(snap.duals, snap.cardinality);
      const DualAccumulation acc = accumulate_duals(snap.duals);
      for (const Rational& y : cert.y) EXPECT_LE(y, 0);
      for (const OddSet& z : cert.z) EXPECT_LT(z.pi, 0);
      for (const Edge& e : inst.edges()) {
        Rational lhs = cert.y[e.u] + cert.y[e.v] + cert.gamma;
        for (const OddSet& z : cert.z) {
          if (z.contains(e.u) && z.contains(e.v)) lhs += z.pi;
        }
        EXPECT_EQ(lhs, cut_load(snap.duals, acc, e));
      }
      EXPECT_TRUE(certify_snapshot(inst, snap).pass()) << c.source.label;
    }
  }
}

TEST(Properties, PassingCertificatesAreSound) {
  std::mt19937_64 rng(23);
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t rejected_scripts = 0;
  auto check = [&](const Case& c, const Matching& m, const CardinalityCertificate& cert) {
    ++checked;
    if (check_cardinality_certificate(c.norm.instance, m, cert).pass()) {
      ++passed;
      EXPECT_EQ(matching_weight(c.norm.instance, m), c.table.at(m.size()).min_weight)
          << c.source.label;
    }
  };

  for (const Case& c : cases()) {
    const Instance& inst = c.norm.instance;
    std::vector<CardinalityCertificate> certs;
    for (const Snapshot& s : c.run.snapshots) certs.push_back(transform_duals(s.duals, s.cardinality));

    // Engine certificates against other matchings of the same size.
    for (std::size_t k = 0; k < certs.size(); ++k) {
      check(c, c.table.at(k).witness, certs[k]);
      for (int trial = 0; trial < 4; ++trial) {
        const Matching m = random_matching(inst, rng, k);
        if (m.size() == k) check(c, m, certs[k]);
      }
    }

    // Certificates from runs with uneven per-tree updates.
    std::uniform_int_distribution<int> amount(0, 4);
    std::vector<std::vector<Rational>> phases;
    std::size_t trees = static_cast<std::size_t>(inst.node_count());
    std::vector<Rational> first;
    for (std::size_t i = 0; i < trees; ++i) first.push_back(Rational(amount(rng), 2));
    phases.push_back(std::move(first));
    try {
      const RunResult scripted = solve(inst, SolveMode::maximum, DualPolicy::scripted(phases));
      for (const Snapshot& s : scripted.snapshots) {
        check(c, s.matching, transform_duals(s.duals, s.cardinality));
      }
    } catch (const InfeasibleDualUpdate&) {
      ++rejected_scripts;
    }
  }
  EXPECT_GT(checked, passed);
  EXPECT_GT(passed, 0u);
  EXPECT_LT(rejected_scripts, cases().size());
}

TEST(Properties, MutatedCertificatesFail) {
  for (const Case& c : cases()) {
    const Instance& inst = c.norm.instance;
    for (const Snapshot& snap : c.run.snapshots) {
      if (snap.cardinality == 0) continue;
      CardinalityCertificate cert = transform_duals(snap.duals, snap.cardinality);
      cert.gamma += 1;
      EXPECT_FALSE(check_cardinality_certificate(inst, snap.matching, cert).pass());

      for (std::size_t drop = 0; drop < snap.matching.size(); ++drop) {
        std::vector<NodePair> fewer = snap.matching.pairs();
        fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
        Snapshot edited = snap;
        edited.matching = Matching(std::move(fewer));
        EXPECT_FALSE(certify_snapshot(inst, edited).pass());
      }
    }
  }
}

TEST(Properties, AuxiliaryCompletionAgrees) {
  for (const Case& c : cases()) {
    for (const Snapshot& snap : c.run.snapshots) {
      const AuxiliaryCompletion comp = build_auxiliary_completion(c.norm.instance, snap);
      EXPECT_TRUE(check_perfect_certificate(comp).pass()) << c.source.label;
      EXPECT_EQ(matching_weight(comp.aux_instance, comp.extended_matching), snap.weight);
    }
  }
}

TEST(Properties, DoubledGraphHalvesToOverallMinimum) {
  for (const Case& c : cases()) {
    const Instance& original = c.source.instance;
    const auto doubled = min_perfect_matching_weight(build_doubled_graph(original));
    ASSERT_TRUE(doubled.has_value());
    Rational best = 0;
    for (const OracleEntry& e : c.table.by_cardinality) {
      best = std::min(best, e.min_weight - Rational(e.k) * c.norm.record.shift);
    }
    EXPECT_EQ(*doubled / 2, best) << c.source.label;
  }
}

}  // namespace
}  // namespace blossomcert
