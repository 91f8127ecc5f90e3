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

#include "gamesym/roles.h"

#include <gtest/gtest.h>

#include "gamesym/error.h"
#include "gamesym/fixtures.h"
#include "test_support.h"

namespace gamesym {
namespace {

using testing::R;

std::vector<RoleId> RolesOf(int n) {
  std::vector<RoleId> out;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out.push_back({i, j});
  }
  return out;
}

TEST(ExtractRole, AgreesWithPayoffs) {
  for (const Game& g : testing::Corpus(24, testing::AllShapes())) {
    for (const RoleId id : RolesOf(g.players())) {
      const Role role = ExtractRole(g, id.owner, id.counterpart);
      for (std::size_t index = 0; index < g.num_profiles(); ++index) {
        const Profile a = g.ProfileAt(index);
        if (id.diagonal()) {
          const std::vector<int> removed = {id.owner};
          EXPECT_EQ(role.At(Restrict(a, removed), a[id.owner]),
                    g.PayoffOf(id.owner, index));
        } else {
          const std::vector<int> removed = {id.owner, id.counterpart};
          EXPECT_EQ(role.At(Restrict(a, removed), a[id.owner],
                            a[id.counterpart]),
                    g.PayoffOf(id.owner, index));
        }
      }
    }
  }
}

TEST(ExtractRole, Exsym4Entry) {
  const Role r21 = ExtractRole(Fixture("exsym4"), 1, 0);
  const ReducedProfile cd{{2, 3}, {0, 1}};
  EXPECT_EQ(r21.At(cd, 1, 0), R(1));
  EXPECT_EQ(r21.At(cd, 0, 1), R(0));
  EXPECT_THROW(r21.At(cd, 1), Error);
}

TEST(ExtractRole, OutOfRange) {
  EXPECT_THROW(ExtractRole(Fixture("notrans3"), 0, 3), Error);
}

TEST(BlindRelated, Overdet3EveryPair) {
  const Game g = Fixture("overdet3");
  for (const RoleId a : RolesOf(3)) {
    for (const RoleId b : RolesOf(3)) {
      if (a.diagonal() != b.diagonal()) continue;
      EXPECT_TRUE(BlindRelated(g, a, b).holds)
          << ToString(a) << " " << ToString(b);
    }
  }
}

TEST(BlindRelated, DiagonalFailsOnThreePlayers) {
  const Game g = Fixture("notrans3");
  const auto r = BlindRelated(g, {0, 0}, {0, 0});
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(g.FormatProfile(r.counterexample->profile), "(a,b,c)");
  EXPECT_EQ(ToCycleString(r.counterexample->sigma), "(2 3)");
  EXPECT_EQ(r.counterexample->lhs, R(0));
  EXPECT_EQ(r.counterexample->rhs, R(3));
}

TEST(BlindRelated, Notrans12) {
  EXPECT_TRUE(BlindRelated(Fixture("notrans3"), {0, 1}, {1, 0}).holds);
}

TEST(BlindRelated, MixedArityThrows) {
  try {
    BlindRelated(Fixture("notrans3"), {0, 0}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidQuery);
  }
}

TEST(TwistedRelated, ReflexiveViaIdentity) {
  for (const Game& g : testing::Corpus(40, testing::AllShapes())) {
    for (const RoleId a : RolesOf(g.players())) {
      const auto r = TwistedRelated(g, a, a);
      EXPECT_TRUE(r.holds);
      ASSERT_TRUE(r.witness);
      EXPECT_TRUE(r.witness->IsIdentity());
      EXPECT_TRUE(Simulates(g, a, a).holds);
    }
  }
}

TEST(TwistedRelated, Tnotrans4) {
  const Game g = Fixture("tnotrans4");
  const auto t12 = TwistedRelated(g, {0, 1}, {1, 0});
  EXPECT_TRUE(t12.holds);
  ASSERT_TRUE(t12.witness);
  EXPECT_EQ(ToCycleString(*t12.witness), "(1 2)");

  const auto t13 = TwistedRelated(g, {0, 2}, {2, 0});
  EXPECT_FALSE(t13.holds);
  ASSERT_EQ(t13.rejected.size(), 2u);
  EXPECT_EQ(ToCycleString(t13.rejected[0].sigma), "(1 3)");
  EXPECT_EQ(ToCycleString(t13.rejected[1].sigma), "(1 3)(2 4)");
  for (const auto& r : t13.rejected) {
    EXPECT_EQ(g.FormatProfile(r.profile), "(a,b,c,d)");
    EXPECT_EQ(r.lhs, R(1));
  }
  EXPECT_EQ(t13.rejected[0].rhs, R(4));
  EXPECT_EQ(t13.rejected[1].rhs, R(0));
}

TEST(Simulates, Exsym4Witnesses) {
  const Game g = Fixture("exsym4");
  const auto r = Simulates(g, {0, 1}, {1, 0});
  ASSERT_TRUE(r.holds);
  auto at = [&](std::string_view p) {
    return ToCycleString(
        r.candidates[r.witness_of_profile[g.IndexOf(g.ParseProfile(p))]]);
  };
  EXPECT_EQ(at("b,a,c,d"), "(1 2)(3 4)");
  EXPECT_EQ(at("b,a,d,c"), "(1 2)");
}

TEST(Simulates, Exsym4Reverse) {
  const Game g = Fixture("exsym4");
  const auto r = Simulates(g, {1, 0}, {0, 1});
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample);
  EXPECT_EQ(g.FormatProfile(r.counterexample->profile), "(a,b,c,d)");
  EXPECT_EQ(r.counterexample->lhs, R(1));
  EXPECT_EQ(r.counterexample->rhs, R(0));
}

TEST(Witnesses, RespectPins) {
  for (const Game& g : testing::Corpus(60, testing::AllShapes())) {
    for (const RoleId a : RolesOf(g.players())) {
      for (const RoleId b : RolesOf(g.players())) {
        if (a.diagonal() != b.diagonal()) continue;
        const auto t = TwistedRelated(g, a, b);
        if (t.witness) {
          EXPECT_EQ((*t.witness)(b.owner), a.owner);
          EXPECT_EQ((*t.witness)(b.counterpart), a.counterpart);
        }
        for (const auto& c : Simulates(g, a, b).candidates) {
          EXPECT_EQ(c(b.owner), a.owner);
          EXPECT_EQ(c(b.counterpart), a.counterpart);
        }
      }
    }
  }
}

TEST(Inclusions, BlindTwistedSimulates) {
  for (const Game& g : testing::Corpus(80, testing::AllShapes())) {
    for (const RoleId a : RolesOf(g.players())) {
      for (const RoleId b : RolesOf(g.players())) {
        if (a.diagonal() != b.diagonal()) continue;
        const bool blind = RelationHolds(g, RoleRelation::kBlind, a, b);
        const bool twisted = RelationHolds(g, RoleRelation::kTwisted, a, b);
        const bool sim = RelationHolds(g, RoleRelation::kSimulates, a, b);
        if (blind) EXPECT_TRUE(twisted);
        if (twisted) EXPECT_TRUE(sim);
        EXPECT_EQ(blind, BlindRelated(g, a, b).holds);
        EXPECT_EQ(twisted, TwistedRelated(g, a, b).holds);
        EXPECT_EQ(sim, Simulates(g, a, b).holds);
        // Anything blindly related to r forces r B_r r.
        if (blind) EXPECT_TRUE(RelationHolds(g, RoleRelation::kBlind, a, a));
      }
    }
  }
}

TEST(TwoPlayers, RelationsCoincide) {
  const std::vector<testing::Shape> shapes = {{2, 2}, {2, 3}};
  for (const Game& g : testing::Corpus(40, shapes)) {
    for (const RoleId a : RolesOf(2)) {
      for (const RoleId b : RolesOf(2)) {
        if (a.diagonal() != b.diagonal()) continue;
        const bool blind = RelationHolds(g, RoleRelation::kBlind, a, b);
        EXPECT_EQ(blind, RelationHolds(g, RoleRelation::kTwisted, a, b));
        EXPECT_EQ(blind, RelationHolds(g, RoleRelation::kSimulates, a, b));
      }
    }
  }
}

TEST(RoleRelationTable, MatchesPairwiseQueries) {
  for (const Game& g : testing::Corpus(24, testing::AllShapes())) {
    for (RoleRelation x : {RoleRelation::kBlind, RoleRelation::kTwisted,
                           RoleRelation::kSimulates}) {
      const RoleRelationTable table(g, x);
      for (const RoleId a : RolesOf(g.players())) {
        for (const RoleId b : RolesOf(g.players())) {
          const auto v = table.At(a, b);
          if (a.diagonal() != b.diagonal()) {
            EXPECT_FALSE(v.has_value());
          } else {
            ASSERT_TRUE(v.has_value());
            EXPECT_EQ(*v, RelationHolds(g, x, a, b));
          }
        }
      }
    }
  }
}

TEST(TwistedClasses, Overdet3CollapsesByArity) {
  const auto classes = TwistedClasses(Fixture("overdet3"));
  ASSERT_EQ(classes.size(), 2u);
  std::vector<std::size_t> sizes = {classes[0].size(), classes[1].size()};
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{3, 6}));
}

TEST(TwistedClasses, Exsym4SeparatesTheSwappedRoles) {
  const auto classes = TwistedClasses(Fixture("exsym4"));
  for (const auto& cls : classes) {
    const bool has12 =
        std::find(cls.begin(), cls.end(), RoleId{0, 1}) != cls.end();
    const bool has21 =
        std::find(cls.begin(), cls.end(), RoleId{1, 0}) != cls.end();
    EXPECT_FALSE(has12 && has21);
  }
}

TEST(TwistedClasses, PartitionAllRoles) {
  for (const Game& g : testing::Corpus(40, testing::AllShapes())) {
    const auto classes = TwistedClasses(g);
    std::vector<RoleId> seen;
    for (const auto& cls : classes) {
      for (const RoleId r : cls) {
        seen.push_back(r);
        EXPECT_EQ(r.diagonal(), cls.front().diagonal());
        EXPECT_TRUE(RelationHolds(g, RoleRelation::kTwisted, cls.front(), r));
      }
    }
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, RolesOf(g.players()));
  }
}

}  // namespace
}  // namespace gamesym
