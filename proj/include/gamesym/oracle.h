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

#ifndef GAMESYM_ORACLE_H_
#define GAMESYM_ORACLE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "gamesym/game.h"
#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"

// Reference implementations written straight from the quantified
// definitions: full enumeration of S_n with explicit pin tests, pairwise
// profile comparisons, no pruning beyond stopping at the first
// counterexample. They share only the payoff table with the fast path.
namespace gamesym::oracle {

// Throws Error(kGuard) outside 2 <= players <= 7, 2 <= actions <= 4.
void CheckGuard(int players, int actions);

// Permutations are plain image vectors here.
using Images = std::vector<int>;

bool NaiveInvariant(const Game& game, const Images& sigma);
std::vector<Images> NaiveInvarianceGroup(const Game& game);
// Orbits as sets of profile indices, built by applying every sigma.
std::vector<std::vector<std::size_t>> NaiveOrbits(const Game& game);

bool NaiveAnonymous(const Game& game);
bool NaiveSymmetric(const Game& game);
bool NaiveSelfAnonymous(const Game& game);
bool NaiveSelfSymmetric(const Game& game);
bool NaiveDmSymmetric(const Game& game);

bool NaiveRoleRelation(const Game& game, RoleRelation relation, RoleId lhs,
                       RoleId rhs);

bool NaiveRigid(const Game& game, int i, int j);
bool NaivePlayerRelation(const Game& game, PlayerRelation relation, int i,
                         int j);

// Single-quantifier readings of P^B and Q^B:
//   exists sigma with sigma(j) = i and pi_i(a) = pi_j(a sigma) for all a;
//   every sigma with sigma(j) = i has pi_i(a) = pi_j(a sigma) for all a.
bool NaivePBCharacterization(const Game& game, int i, int j);
bool NaiveQBCharacterization(const Game& game, int i, int j);

enum class GeneratorMode { kGeneral, kAnonymous, kSelfSymmetric };

std::string_view ModeName(GeneratorMode mode);
// Throws Error(kUnknownName).
GeneratorMode ParseMode(std::string_view name);

struct GeneratorConfig {
  int players = 3;
  int actions = 2;
  std::uint64_t seed = 1;
  std::int64_t min_payoff = -9;
  std::int64_t max_payoff = 9;
  GeneratorMode mode = GeneratorMode::kGeneral;
};

// Seeded games. Draws come from std::mt19937_64 seeded with `seed`, mapped
// to min + draw mod (max - min + 1). General mode draws one payoff per
// (profile, player) in index order; anonymous mode draws u^i_a(x) in
// (player, action, partition) order and lifts it; self-symmetric mode draws
// one payoff per orbit, in order of first appearance, shared by all players.
Game Generate(const GeneratorConfig& config);

// The utilities behind an anonymous-mode game.
AnonymousGame GenerateUtilities(const GeneratorConfig& config);

// Comment lines recording the configuration and the PRNG recipe.
std::vector<std::string> GeneratorHeader(const GeneratorConfig& config);

}  // namespace gamesym::oracle

#endif  // GAMESYM_ORACLE_H_
