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

#include "gamesym/oracle.h"

#include <gtest/gtest.h>

#include "gamesym/error.h"
#include "gamesym/game_io.h"
#include "gamesym/symmetry.h"
#include "test_support.h"

namespace gamesym {
namespace {

using oracle::GeneratorConfig;
using oracle::GeneratorMode;

TEST(Guard, RejectsOutOfRangeShapes) {
  for (auto [n, s] : std::vector<std::pair<int, int>>{{1, 2}, {8, 2}, {3, 1},
                                                      {3, 5}}) {
    try {
      oracle::CheckGuard(n, s);
      FAIL() << n << "," << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kGuard);
    }
  }
  EXPECT_NO_THROW(oracle::CheckGuard(7, 4));
  EXPECT_NO_THROW(oracle::CheckGuard(2, 2));
}

TEST(Guard, GeneratorAndNaiveOracleEnforceIt) {
  GeneratorConfig config;
  config.players = 8;
  EXPECT_THROW(oracle::Generate(config), Error);
  config.players = 3;
  config.min_payoff = 5;
  config.max_payoff = 4;
  EXPECT_THROW(oracle::Generate(config), Error);
}

TEST(Mode, Names) {
  for (GeneratorMode m : {GeneratorMode::kGeneral, GeneratorMode::kAnonymous,
                          GeneratorMode::kSelfSymmetric}) {
    EXPECT_EQ(oracle::ParseMode(oracle::ModeName(m)), m);
  }
  EXPECT_THROW(oracle::ParseMode("bogus"), Error);
}

TEST(Generate, Deterministic) {
  for (GeneratorMode m : {GeneratorMode::kGeneral, GeneratorMode::kAnonymous,
                          GeneratorMode::kSelfSymmetric}) {
    GeneratorConfig config;
    config.players = 4;
    config.actions = 3;
    config.seed = 99;
    config.mode = m;
    EXPECT_EQ(SerializeGame(oracle::Generate(config)),
              SerializeGame(oracle::Generate(config)));
    GeneratorConfig other = config;
    other.seed = 100;
    EXPECT_NE(oracle::Generate(config), oracle::Generate(other));
  }
}

TEST(Generate, PayoffsWithinRange) {
  GeneratorConfig config;
  config.players = 3;
  config.actions = 3;
  config.min_payoff = -2;
  config.max_payoff = 1;
  for (config.seed = 0; config.seed < 20; ++config.seed) {
    const Game g = oracle::Generate(config);
    for (std::size_t index = 0; index < g.num_profiles(); ++index) {
      for (const Rational& v : g.Payoffs(index)) {
        EXPECT_GE(v, Rational(-2));
        EXPECT_LE(v, Rational(1));
      }
    }
  }
}

TEST(Generate, AnonymousSeedsClassifyAnonymous) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig config;
    config.players = 2 + static_cast<int>(seed % 4);
    config.actions = 2 + static_cast<int>((seed / 4) % 2);
    config.seed = seed;
    config.mode = GeneratorMode::kAnonymous;
    const Game g = oracle::Generate(config);
    EXPECT_TRUE(Classify(g).anonymous.holds) << seed;
    EXPECT_TRUE(oracle::NaiveAnonymous(g)) << seed;
    const auto rep = ToAnonymous(g);
    ASSERT_TRUE(rep.ok());
    EXPECT_EQ(*rep.game, oracle::GenerateUtilities(config));
    EXPECT_EQ(FromAnonymous(*rep.game), g);
  }
}

TEST(Generate, SelfSymmetricSeedsClassifySelfSymmetric) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorConfig config;
    config.players = 2 + static_cast<int>(seed % 4);
    config.actions = 2 + static_cast<int>((seed / 4) % 2);
    config.seed = seed;
    config.mode = GeneratorMode::kSelfSymmetric;
    const Game g = oracle::Generate(config);
    EXPECT_TRUE(Classify(g).self_symmetric.holds) << seed;
    EXPECT_TRUE(oracle::NaiveSelfSymmetric(g)) << seed;
  }
}

TEST(Generate, EmittedFilesRoundTrip) {
  GeneratorConfig config;
  config.players = 3;
  config.actions = 3;
  config.seed = 7;
  config.mode = GeneratorMode::kAnonymous;
  const Game g = oracle::Generate(config);
  const auto header = oracle::GeneratorHeader(config);
  ASSERT_EQ(header.size(), 3u);
  const std::string text = SerializeGame(g, header);
  EXPECT_NE(text.find("seed"), std::string::npos);
  EXPECT_NE(text.find("anonymous"), std::string::npos);
  EXPECT_EQ(ParseGame(text), g);
}

TEST(Naive, FixturesAgreeWithFastPath) {
  for (const auto& [name, g] : testing::AllFixtures()) {
    const auto fast = InvarianceGroup(g);
    const auto naive = oracle::NaiveInvarianceGroup(g);
    ASSERT_EQ(fast.size(), naive.size()) << name;
    for (std::size_t k = 0; k < fast.size(); ++k) {
      EXPECT_EQ(std::vector<int>(fast[k].images().begin(),
                                 fast[k].images().end()),
                naive[k])
          << name;
    }
    EXPECT_EQ(Orbits(g).classes, oracle::NaiveOrbits(g)) << name;
  }
}

TEST(Naive, InvariantAgreesOnKnownPermutations) {
  const Game g = Fixture("notrans3");
  EXPECT_TRUE(oracle::NaiveInvariant(g, {0, 1, 2}));
  EXPECT_FALSE(oracle::NaiveInvariant(g, {2, 1, 0}));
}

}  // namespace
}  // namespace gamesym
