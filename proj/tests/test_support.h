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

#ifndef GAMESYM_TESTS_TEST_SUPPORT_H_
#define GAMESYM_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamesym/fixtures.h"
#include "gamesym/game.h"
#include "gamesym/oracle.h"
#include "gamesym/permutation.h"
#include "gamesym/rational.h"

namespace gamesym::testing {

// boost::rational compares badly against a plain int of another width, so
// tests always build the Rational explicitly.
inline Rational R(std::int64_t v) { return Rational(v); }

inline Permutation Cyc(int n, std::string_view text) {
  return ParseCycleString(n, text);
}

inline Permutation RandomPermutation(int n, std::uint64_t seed) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 0);
  std::mt19937_64 rng(seed);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::FromImages(images);
}

// Ties payoffs together so that the game becomes invariant under sigma:
// (a, sigma(i)) and (a sigma, i) end up sharing one value, drawn from
// [lo, hi].
inline Game SymmetrizeUnder(const Game& game, const Permutation& sigma,
                            std::uint64_t seed, std::int64_t lo,
                            std::int64_t hi) {
  const int n = game.players();
  const std::size_t cells = game.num_profiles() * n;
  std::vector<std::size_t> parent(cells);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const Profile a = game.ProfileAt(index);
    const std::size_t moved = game.IndexOf(Act(a, sigma));
    for (int i = 0; i < n; ++i) {
      const std::size_t x = find(index * n + sigma(i));
      const std::size_t y = find(moved * n + i);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
  }
  std::mt19937_64 rng(seed);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  std::vector<Rational> value(cells);
  Game out = game;
  for (std::size_t c = 0; c < cells; ++c) {
    const std::size_t root = find(c);
    if (root == c) value[c] = Rational(lo + static_cast<std::int64_t>(rng() % span));
    out.SetPayoff(static_cast<int>(c % n), game.ProfileAt(c / n), value[root]);
  }
  return out;
}

struct Shape {
  int players;
  int actions;
};

// The k-th game of a seeded corpus cycling through `shapes` and five
// flavours: general with a narrow payoff range, general tied under a random
// permutation (twice, with different ranges), anonymous, and self-symmetric.
inline Game CorpusGame(std::size_t k, const std::vector<Shape>& shapes,
                       std::uint64_t base_seed = 20261019) {
  const Shape shape = shapes[k % shapes.size()];
  const std::size_t flavour = (k / shapes.size()) % 5;
  const std::uint64_t seed = base_seed + 7919 * k;
  oracle::GeneratorConfig config;
  config.players = shape.players;
  config.actions = shape.actions;
  config.seed = seed;
  switch (flavour) {
    case 0:
      config.min_payoff = -2;
      config.max_payoff = 2;
      return oracle::Generate(config);
    case 1:
    case 2: {
      config.min_payoff = 0;
      config.max_payoff = 1;
      const Game base = oracle::Generate(config);
      const Permutation sigma = RandomPermutation(shape.players, seed ^ 0x5bd1);
      return SymmetrizeUnder(base, sigma, seed + 1, flavour == 1 ? -3 : 0,
                             flavour == 1 ? 3 : 1);
    }
    case 3:
      config.mode = oracle::GeneratorMode::kAnonymous;
      config.min_payoff = -2;
      config.max_payoff = 2;
      return oracle::Generate(config);
    default:
      config.mode = oracle::GeneratorMode::kSelfSymmetric;
      config.min_payoff = -3;
      config.max_payoff = 3;
      return oracle::Generate(config);
  }
}

inline std::vector<Game> Corpus(std::size_t count,
                                const std::vector<Shape>& shapes,
                                std::uint64_t base_seed = 20261019) {
  std::vector<Game> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(CorpusGame(k, shapes, base_seed));
  }
  return out;
}

// n in 2..5, s in 2..3.
inline const std::vector<Shape>& AllShapes() {
  static const std::vector<Shape> shapes = {{2, 2}, {2, 3}, {3, 2}, {3, 3},
                                            {4, 2}, {4, 3}, {5, 2}, {5, 3}};
  return shapes;
}

// The shapes the naive twins can sweep quickly.
inline const std::vector<Shape>& OracleShapes() {
  static const std::vector<Shape> shapes = {{2, 2}, {2, 3}, {3, 2}, {3, 3},
                                            {4, 2}, {4, 3}, {5, 2}};
  return shapes;
}

inline std::vector<std::pair<std::string, Game>> AllFixtures() {
  std::vector<std::pair<std::string, Game>> out;
  for (const auto& name : FixtureNames()) out.emplace_back(name, Fixture(name));
  return out;
}

}  // namespace gamesym::testing

#endif  // GAMESYM_TESTS_TEST_SUPPORT_H_
