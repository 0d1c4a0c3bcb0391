#include <gtest/gtest.h>

#include <algorithm>
#include <iostream>

#include "permbinom/acceptance.hpp"

namespace {

std::vector<permbinom::acceptance::Outcome> g_outcomes;

void expect_criterion(int id) {
  const auto it = std::find_if(g_outcomes.begin(), g_outcomes.end(),
                               [id](const auto& o) { return o.id == id; });
  ASSERT_NE(it, g_outcomes.end()) << "criterion " << id << " did not run";
  EXPECT_TRUE(it->passed) << it->line();
}

}  // namespace

TEST(Acceptance, Example73) { expect_criterion(1); }
TEST(Acceptance, KappaValues) { expect_criterion(2); }
TEST(Acceptance, QuadraticExactness) { expect_criterion(3); }
TEST(Acceptance, CubicExactness) { expect_criterion(4); }
TEST(Acceptance, PointCountCongruence) { expect_criterion(5); }
TEST(Acceptance, ExtensionCounts) { expect_criterion(6); }
TEST(Acceptance, CharacteristicTwoSums) { expect_criterion(7); }
TEST(Acceptance, BoundsContainment) { expect_criterion(8); }
TEST(Acceptance, SharpnessWitnesses) { expect_criterion(9); }
TEST(Acceptance, CharacterIdentities) { expect_criterion(10); }

int main(int argc, char** argv) {
  ::testing::InitGoogleTest(&argc, argv);
  // runtime limits are stated for a single thread
  g_outcomes = permbinom::acceptance::run_all(1);
  for (const auto& o : g_outcomes) std::cout << o.line() << '\n';
  std::cout << std::flush;
  return RUN_ALL_TESTS();
}
