#include "blossomcert/oracle.hpp"
#include "blossomcert/scenario.hpp"

#include "support/fixtures.hpp"
#include "support/random_instances.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <map>

namespace blossomcert {
namespace {

using testing::pairs;

/// Independent reference: memoised recursion over the set of still-free nodes,
/// always deciding the lowest free node first (skip it, or match it).
class SubsetReference {
 public:
  explicit SubsetReference(const Instance& inst) : inst_(inst) {}

  /// Minimum weight per cardinality for matchings inside `free`.
  std::vector<std::optional<Rational>> solve(std::uint32_t free) {
    if (auto it = memo_.find(free); it != memo_.end()) return it->second;
    std::vector<std::optional<Rational>> best{Rational(0)};
    if (free != 0) {
      const int v = std::countr_zero(free);
      const std::uint32_t rest = free & ~(1u << v);
      best = solve(rest);
      for (std::size_t ei : inst_.incident_edges(v)) {
        const Edge& e = inst_.edge(ei);
        const int u = e.u == v ? e.v : e.u;
        if (!(rest & (1u << u))) continue;
        const auto sub = solve(rest & ~(1u << u));
        for (std::size_t k = 0; k < sub.size(); ++k) {
          if (!sub[k]) continue;
          if (best.size() < k + 2) best.resize(k + 2);
          const Rational w = *sub[k] + e.weight;
          if (!best[k + 1] || w < *best[k + 1]) best[k + 1] = w;
        }
      }
    }
    memo_[free] = best;
    return best;
  }

 private:
  const Instance& inst_;
  std::map<std::uint32_t, std::vector<std::optional<Rational>>> memo_;
};

TEST(Oracle, Triangle) {
  const OracleTable t = min_weight_by_cardinality(testing::triangle());
  EXPECT_EQ(t.nu, 1u);
  ASSERT_EQ(t.by_cardinality.size(), 2u);
  EXPECT_EQ(t.at(0).min_weight, Rational(0));
  EXPECT_EQ(t.at(1).min_weight, Rational(1));
  EXPECT_EQ(t.at(1).witness, pairs({{1, 2}}));
}

TEST(Oracle, Path4) {
  const OracleTable t = min_weight_by_cardinality(testing::path4());
  EXPECT_EQ(t.nu, 2u);
  EXPECT_EQ(t.at(0).min_weight, Rational(0));
  EXPECT_EQ(t.at(1).min_weight, Rational(1));
  EXPECT_EQ(t.at(2).min_weight, Rational(10));
  EXPECT_EQ(t.at(2).witness, pairs({{1, 2}, {3, 4}}));
}

TEST(Oracle, ThreeForests) {
  const Instance inst = figure2_instance();
  const OracleTable t = min_weight_by_cardinality(inst);
  EXPECT_EQ(t.nu, 4u);
  EXPECT_EQ(t.at(4).min_weight, Rational(3));
  EXPECT_TRUE(t.at(4).witness.contains(0, 1));
  EXPECT_EQ(t.at(3).min_weight, Rational(0));
  EXPECT_EQ(matching_number(inst), 4u);
}

TEST(Oracle, MatchingNumber) {
  EXPECT_EQ(matching_number(Instance(3, {})), 0u);
  EXPECT_EQ(matching_number(testing::path4()), 2u);
}

TEST(Oracle, OverallMinimumMayUseLargerCardinality) {
  const Instance inst(4, {{0, 1, -1}, {2, 3, -2}, {1, 2, 5}});
  const OracleTable t = min_weight_by_cardinality(inst);
  EXPECT_EQ(t.at(1).min_weight, Rational(-2));
  EXPECT_EQ(t.at(2).min_weight, Rational(-3));
  EXPECT_EQ(t.overall_minimum(), Rational(-3));
  EXPECT_EQ(min_weight_by_cardinality(testing::path4()).overall_minimum(), Rational(0));
}

TEST(Oracle, WitnessIsLexicographicallyFirst) {
  // Two optimal single edges; the lower index wins.
  const Instance inst(4, {{2, 3, 1}, {0, 1, 1}});
  EXPECT_EQ(min_weight_by_cardinality(inst).at(1).witness, pairs({{3, 4}}));
}

TEST(Oracle, RespectsBudget) {
  EXPECT_THROW(min_weight_by_cardinality(Instance(17, {})), OracleBudgetError);
  EXPECT_NO_THROW(min_weight_by_cardinality(Instance(17, {}), 17));
  EXPECT_THROW(min_weight_by_cardinality(Instance(4, {}), 3), OracleBudgetError);
  EXPECT_THROW(matching_number(Instance(65, {}), 100), OracleBudgetError);
}

TEST(Oracle, AgreesWithSubsetReference) {
  const auto suite = testing::random_suite();
  for (std::size_t i = 0; i < suite.size(); i += 3) {
    const Instance& inst = suite[i].instance;
    if (inst.node_count() > 12) continue;
    const OracleTable t = min_weight_by_cardinality(inst);
    SubsetReference ref(inst);
    const auto expected = ref.solve((1u << inst.node_count()) - 1);
    ASSERT_EQ(t.by_cardinality.size(), expected.size()) << suite[i].label;
    for (std::size_t k = 0; k < expected.size(); ++k) {
      ASSERT_TRUE(expected[k].has_value());
      EXPECT_EQ(t.at(k).min_weight, *expected[k]) << suite[i].label << " k=" << k;
      EXPECT_EQ(t.at(k).k, k);
      EXPECT_EQ(t.at(k).witness.size(), k);
      EXPECT_TRUE(is_matching_of(inst, t.at(k).witness));
      EXPECT_EQ(matching_weight(inst, t.at(k).witness), t.at(k).min_weight);
    }
  }
}

}  // namespace
}  // namespace blossomcert
