#include "blossomcert/scenario.hpp"

#include "support/fixtures.hpp"

#include <gtest/gtest.h>

namespace blossomcert {
namespace {

TEST(ThreeForestInstance, Shape) {
  const Instance inst = figure2_instance();
  EXPECT_EQ(inst.node_count(), 9);
  EXPECT_EQ(inst.edge_count(), 9u);
  EXPECT_EQ(inst.edge(*inst.find_edge(0, 1)).weight, Rational(3));
  EXPECT_EQ(inst.edge(*inst.find_edge(1, 2)).weight, Rational(5));
  EXPECT_EQ(inst.edge(*inst.find_edge(0, 2)).weight, Rational(4));
  for (NodeId i = 0; i < 3; ++i) {
    EXPECT_EQ(inst.edge(*inst.find_edge(i, 3 + i)).weight, Rational(0));
    EXPECT_EQ(inst.edge(*inst.find_edge(3 + i, 6 + i)).weight, Rational(0));
  }
}

TEST(CompareDualPolicies, UnequalAmountsDiverge) {
  const ScenarioReport r = compare_dual_policies(figure2_instance(), {1, 1, 3});
  ASSERT_TRUE(r.divergence.has_value());
  EXPECT_EQ(*r.divergence, 4u);
  EXPECT_FALSE(r.scripted_error.has_value());
  ASSERT_EQ(r.scripted_result.size(), 5u);
  EXPECT_EQ(r.scripted_result[4].weight, Rational(4));
  EXPECT_EQ(r.uniform_result[4].weight, Rational(3));
  EXPECT_EQ(r.oracle_minima[4].weight, Rational(3));
  for (std::size_t k = 0; k < 4; ++k) {
    EXPECT_EQ(r.scripted_result[k].weight, r.oracle_minima[k].weight);
  }
}

TEST(CompareDualPolicies, EqualAmountsDoNotDiverge) {
  const ScenarioReport r = compare_dual_policies(figure2_instance(), {1, 1, 1});
  EXPECT_FALSE(r.divergence.has_value());
  EXPECT_FALSE(r.scripted_error.has_value());
  ASSERT_EQ(r.scripted_result.size(), 5u);
  EXPECT_EQ(r.scripted_result[4].weight, Rational(3));
}

TEST(CompareDualPolicies, SingleAmountOnPath4) {
  // The first dual phase of P4 has four trees, so a one-entry script is
  // rejected and only the uniform run remains.
  const ScenarioReport r = compare_dual_policies(testing::path4(), {1});
  EXPECT_FALSE(r.divergence.has_value());
  ASSERT_TRUE(r.scripted_error.has_value());
  EXPECT_TRUE(r.scripted_result.empty());
  ASSERT_EQ(r.uniform_result.size(), 3u);
  EXPECT_EQ(r.uniform_result[2].weight, Rational(10));
}

TEST(CompareDualPolicies, InfeasibleAmountsAreReported) {
  const ScenarioReport r = compare_dual_policies(figure2_instance(), {3, 3, 3});
  ASSERT_TRUE(r.scripted_error.has_value());
  EXPECT_NE(r.scripted_error->find("edge_cut"), std::string::npos);
  EXPECT_EQ(r.uniform_result.size(), 5u);
  EXPECT_FALSE(r.divergence.has_value());
}

}  // namespace
}  // namespace blossomcert
