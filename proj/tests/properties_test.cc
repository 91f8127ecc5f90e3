// Copyright 2026 The gamesym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <set>

#include <gtest/gtest.h>

#include "gamesym/fixtures.h"
#include "gamesym/oracle.h"
#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"
#include "test_support.h"

namespace gamesym {
namespace {

std::vector<std::pair<std::string, Game>> PropertyCorpus() {
  auto out = testing::AllFixtures();
  const auto games = testing::Corpus(1000, testing::AllShapes());
  for (std::size_t k = 0; k < games.size(); ++k) {
    out.emplace_back("corpus#" + std::to_string(k), games[k]);
  }
  return out;
}

const std::vector<std::pair<std::string, Game>>& Games() {
  static const auto games = PropertyCorpus();
  return games;
}

TEST(Properties, NonDisputedDiagnosticsHold) {
  for (const auto& [label, g] : Games()) {
    for (const auto& c : RunDiagnostics(g).checks) {
      if (c.disputed) continue;
      EXPECT_TRUE(c.holds) << label << ": " << c.name << " " << c.detail;
    }
  }
}

TEST(Properties, InvarianceGroupIsAGroup) {
  for (const auto& [label, g] : Games()) {
    const auto group = InvarianceGroup(g);
    const std::set<Permutation> members(group.begin(), group.end());
    for (const auto& a : group) {
      ASSERT_TRUE(members.count(Inverse(a))) << label;
      for (const auto& b : group) {
        ASSERT_TRUE(members.count(Compose(a, b))) << label;
      }
    }
  }
}

TEST(Properties, RoleRelationLaws) {
  for (const auto& [label, g] : Games()) {
    for (const auto& rel : ComputePropertyReport(g).relations) {
      if (rel.name == "T_r") {
        EXPECT_TRUE(rel.reflexive.holds) << label;
        EXPECT_TRUE(rel.symmetric.holds) << label;
        EXPECT_TRUE(rel.transitive.holds) << label;
      }
      if (rel.name == "M_r") {
        EXPECT_TRUE(rel.reflexive.holds) << label;
        EXPECT_TRUE(rel.transitive.holds) << label;
      }
      if (rel.name == "B" && g.players() >= 4) {
        EXPECT_TRUE(rel.transitive.holds) << label;
      }
    }
  }
}

TEST(Properties, RoleRelationInclusions) {
  for (const auto& [label, g] : Games()) {
    const RoleRelationTable blind(g, RoleRelation::kBlind);
    const RoleRelationTable twisted(g, RoleRelation::kTwisted);
    const RoleRelationTable sim(g, RoleRelation::kSimulates);
    const int n = g.players();
    for (int a = 0; a < n * n; ++a) {
      for (int b = 0; b < n * n; ++b) {
        const RoleId x{a / n, a % n};
        const RoleId y{b / n, b % n};
        if (x.diagonal() != y.diagonal()) continue;
        if (*blind.At(x, y)) EXPECT_TRUE(*twisted.At(x, y)) << label;
        if (*twisted.At(x, y)) EXPECT_TRUE(*sim.At(x, y)) << label;
      }
    }
  }
}

TEST(Properties, QBlindCharacterization) {
  for (const auto& [label, g] : Games()) {
    if (g.players() == 5 && g.num_actions() == 3) continue;
    for (int i = 0; i < g.players(); ++i) {
      for (int j = 0; j < g.players(); ++j) {
        EXPECT_EQ(CellHolds(g, PlayerRelation::kQB, i, j),
                  oracle::NaiveQBCharacterization(g, i, j))
            << label << " " << i + 1 << "," << j + 1;
      }
    }
  }
}

// The role-wise P^B needs r_i^i B_r r_j^j, which a single swapping
// permutation does not give. These record where that bites.
TEST(Properties, PBlindImpliesItsCharacterization) {
  for (const auto& [label, g] : Games()) {
    for (int i = 0; i < g.players(); ++i) {
      for (int j = 0; j < g.players(); ++j) {
        if (CellHolds(g, PlayerRelation::kPB, i, j)) {
          EXPECT_TRUE(oracle::NaivePBCharacterization(g, i, j))
              << label << " " << i + 1 << "," << j + 1;
        }
      }
    }
  }
}

TEST(Properties, Notrans3TwistedButNotPBlind) {
  const Game g = Fixture("notrans3");
  EXPECT_TRUE(CellHolds(g, PlayerRelation::kT, 0, 1));
  EXPECT_TRUE(oracle::NaivePBCharacterization(g, 0, 1));
  const RelationCell pb = EvaluateCell(g, PlayerRelation::kPB, 0, 1);
  EXPECT_FALSE(pb.holds);
  ASSERT_TRUE(pb.failing_roles);
  EXPECT_EQ(pb.failing_roles->first, (RoleId{0, 0}));
  EXPECT_EQ(pb.failing_roles->second, (RoleId{1, 1}));
  ASSERT_TRUE(pb.counterexample);
  EXPECT_EQ(g.FormatProfile(pb.counterexample->profile), "(a,b,c)");
  EXPECT_EQ(ToCycleString(pb.counterexample->sigma), "(1 3 2)");
  EXPECT_EQ(pb.counterexample->lhs, testing::R(0));
  EXPECT_EQ(pb.counterexample->rhs, testing::R(3));
}

TEST(Properties, SimulationSymmetricForSmallGames) {
  for (const auto& [label, g] : Games()) {
    if (g.players() > 3) continue;
    for (const auto& rel : ComputePropertyReport(g).relations) {
      if (rel.name == "M") EXPECT_TRUE(rel.symmetric.holds) << label;
    }
  }
}

TEST(Properties, TwoPlayerRelationsCollapse) {
  for (const auto& [label, g] : Games()) {
    if (g.players() != 2) continue;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const bool b = CellHolds(g, PlayerRelation::kB, i, j);
        EXPECT_EQ(b, CellHolds(g, PlayerRelation::kT, i, j)) << label;
        EXPECT_EQ(b, CellHolds(g, PlayerRelation::kM, i, j)) << label;
      }
    }
  }
}

}  // namespace
}  // namespace gamesym
