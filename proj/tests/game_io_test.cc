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

#include "gamesym/game_io.h"

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "gamesym/error.h"
#include "gamesym/fixtures.h"
#include "test_support.h"

namespace gamesym {
namespace {

using testing::R;

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string FixturePath(const std::string& name) {
  return std::string(GAMESYM_DATA_DIR) + "/fixtures/" + name + ".json";
}

ErrorCode CodeOf(std::string_view text) {
  try {
    ParseGame(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::kGuard;
}

std::string MessageOf(std::string_view text) {
  try {
    ParseGame(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGame, NotransFileHas27Profiles) {
  const Game g = LoadGame(FixturePath("notrans3"));
  EXPECT_EQ(g.players(), 3);
  EXPECT_EQ(g.num_actions(), 3);
  EXPECT_EQ(g.num_profiles(), 27u);
  EXPECT_EQ(g, Fixture("notrans3"));
}

TEST(ParseGame, DefaultFillsUnlistedProfiles) {
  const char* text = R"({
    "players": 3,
    "actions": ["a", "b", "c"],
    "default": [0, 0, 0],
    "payoffs": {
      "a,b,c": [0, 1, 2], "a,c,b": [3, 2, 1], "b,a,c": [1, 0, 4],
      "b,c,a": [5, 4, 0], "c,a,b": [2, 3, 5], "c,b,a": [4, 5, 3]
    }
  })";
  const Game g = ParseGame(text);
  int zero_profiles = 0;
  for (std::size_t index = 0; index < g.num_profiles(); ++index) {
    bool zero = true;
    for (int i = 0; i < 3; ++i) zero = zero && g.PayoffOf(i, index) == R(0);
    zero_profiles += zero;
  }
  EXPECT_EQ(zero_profiles, 21);
  EXPECT_EQ(g, Fixture("notrans3"));
}

TEST(ParseGame, RationalForms) {
  const Game g = ParseGame(R"({"players": 2, "actions": ["x", "y"],
    "default": ["1/2", "0.25"], "payoffs": {"x,x": [3, "-7/3"]}})");
  EXPECT_EQ(g.PayoffOf(0, g.ParseProfile("x,x")), R(3));
  EXPECT_EQ(g.PayoffOf(1, g.ParseProfile("x,x")), Rational(-7, 3));
  EXPECT_EQ(g.PayoffOf(0, g.ParseProfile("y,x")), Rational(1, 2));
  EXPECT_EQ(g.PayoffOf(1, g.ParseProfile("y,y")), Rational(1, 4));
}

TEST(ParseGame, CommentsAreIgnored) {
  const Game g = ParseGame(
      "// header\n{\"players\": 2, /* inline */ \"actions\": [\"a\", \"b\"],"
      " \"default\": [0, 0], \"payoffs\": {}}");
  EXPECT_EQ(g.num_profiles(), 4u);
}

TEST(ParseGame, Errors) {
  EXPECT_EQ(CodeOf(R"({"players": 2, "actions": ["a","b"],
    "payoffs": {"a,a": [1,1], "a,a": [2,2]}, "default": [0,0]})"),
            ErrorCode::kParse);
  EXPECT_NE(MessageOf(R"({"players": 2, "actions": ["a","b"],
    "payoffs": {"a,a": [1,1], "a,a": [2,2]}, "default": [0,0]})")
                .find("a,a"),
            std::string::npos);
  EXPECT_EQ(CodeOf(R"({"players": 2, "actions": ["a","b"],
    "default": [0,0], "payoffs": {"a,b": [1]}})"),
            ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"players": 2, "actions": ["a","b"],
    "default": [0,0], "payoffs": {"a,q": [1,1]}})"),
            ErrorCode::kUnknownName);
  EXPECT_NE(MessageOf(R"({"players": 2, "actions": ["a","b"],
    "payoffs": {"a,a": [1,1]}})")
                .find("missing"),
            std::string::npos);
  EXPECT_EQ(CodeOf(R"({"players": 2, "actions": ["a","b"],
    "default": [0,0], "payoffs": {"a,a": ["1/0", 1]}})"),
            ErrorCode::kParse);
  EXPECT_NE(MessageOf(R"({"players": 2, "actions": ["a","b"],
    "default": [0,0], "payoffs": {"a,a": [0.5, 1]}})")
                .find("floating-point"),
            std::string::npos);
  EXPECT_NE(MessageOf(R"({"players": 2, "actions": ["a","b"], "extra": 1,
    "default": [0,0], "payoffs": {}})")
                .find("extra"),
            std::string::npos);
  EXPECT_EQ(CodeOf("{not json"), ErrorCode::kParse);
  EXPECT_EQ(CodeOf(R"({"players": 1, "actions": ["a","b"], "payoffs": {}})"),
            ErrorCode::kParse);
}

TEST(SerializeGame, RoundTripsEveryFixture) {
  for (const auto& name : FixtureNames()) {
    const Game g = Fixture(name);
    const std::string text = SerializeGame(g, {"header line"});
    EXPECT_EQ(text.rfind("// header line\n", 0), 0u);
    EXPECT_EQ(ParseGame(text), g) << name;
    EXPECT_EQ(SerializeGame(ParseGame(text), {"header line"}), text);
  }
}

TEST(SerializeGame, ShippedFilesMatchFixtures) {
  for (const auto& name : FixtureNames()) {
    const std::string text = ReadFile(FixturePath(name));
    ASSERT_FALSE(text.empty()) << name;
    EXPECT_EQ(ParseGame(text), Fixture(name)) << name;
  }
}

TEST(SerializeGame, RoundTripsRandomRationals) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    oracle::GeneratorConfig config;
    config.seed = seed;
    Game g = oracle::Generate(config);
    g.SetPayoff(0, g.ProfileAt(seed % g.num_profiles()),
                Rational(static_cast<std::int64_t>(seed) - 7, 3));
    EXPECT_EQ(ParseGame(SerializeGame(g)), g);
  }
}

TEST(LoadGame, MissingFileThrows) {
  EXPECT_THROW(LoadGame("/nonexistent/game.json"), Error);
}

}  // namespace
}  // namespace gamesym
