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

#ifndef GAMESYM_RELATIONS_H_
#define GAMESYM_RELATIONS_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamesym/game.h"
#include "gamesym/parallel.h"
#include "gamesym/roles.h"

namespace gamesym {

enum class PlayerRelation { kB, kR, kT, kM, kPB, kPT, kPM, kQB, kQT, kQM };

inline constexpr PlayerRelation kAllPlayerRelations[] = {
    PlayerRelation::kB,  PlayerRelation::kR,  PlayerRelation::kT,
    PlayerRelation::kM,  PlayerRelation::kPB, PlayerRelation::kPT,
    PlayerRelation::kPM, PlayerRelation::kQB, PlayerRelation::kQT,
    PlayerRelation::kQM};

// "B", "R", "T", "M", "PB", ..., "QM".
std::string_view RelationName(PlayerRelation relation);
// Throws Error(kUnknownName).
PlayerRelation ParseRelation(std::string_view name);

// One cell i X j of a relation matrix.
struct RelationCell {
  bool holds = false;
  // T: the swapping permutation. P: the matching tau with tau(i) = j.
  std::optional<Permutation> witness;
  // M: pinned candidates and, per profile index, the first that works.
  std::vector<Permutation> candidates;
  std::vector<int> witness_of_profile;
  // Q: matching[k] = l with r_i^k X_r r_j^l for k != i; -1 at k = i.
  std::vector<int> matching;
  // The failing role comparison (P and Q) and its counterexample.
  std::optional<std::pair<RoleId, RoleId>> failing_roles;
  std::optional<RoleCounterexample> counterexample;
  // T: every rejected swapping permutation.
  std::vector<RoleCounterexample> rejected;
  // R on the diagonal holds by the convention (i i) = identity.
  bool by_convention = false;
};

// i B j: r_i^j B_r r_j^i. i B i compares r_i^i with itself.
RelationCell Blind(const Game& game, int i, int j);
// i R j: pi_i(a) = pi_j(a (i j)) for all a.
RelationCell Rigid(const Game& game, int i, int j);
// i T j: r_i^j T_r r_j^i.
RelationCell Twisted(const Game& game, int i, int j);
// i M j: r_i^j M_r r_j^i.
RelationCell SimulatesPlayer(const Game& game, int i, int j);
// Some tau with tau(i) = j has r_i^k X_r r_j^{tau(k)} for every k; at k = i
// the diagonal roles are compared.
RelationCell PRelation(const Game& game, int i, int j, RoleRelation x);
// r_i^i X_r r_j^j, and every k != i has some l != j with r_i^k X_r r_j^l.
// The choice of l need not be injective in k.
RelationCell QRelation(const Game& game, int i, int j, RoleRelation x);

RelationCell EvaluateCell(const Game& game, PlayerRelation relation, int i,
                          int j);
bool CellHolds(const Game& game, PlayerRelation relation, int i, int j);

struct RelationMatrix {
  PlayerRelation relation;
  int players;
  std::vector<RelationCell> cells;  // row-major

  const RelationCell& At(int i, int j) const { return cells[i * players + j]; }
  bool Holds(int i, int j) const { return At(i, j).holds; }
};

RelationMatrix ComputeRelationMatrix(const Game& game, PlayerRelation relation,
                                     Exec exec = Exec::kParallel);

// A property verdict on one game. When false, `players` (for B, R, T, M) or
// `roles` (for B_r, T_r, M_r) names the offending element, pair or triple.
struct PropertyVerdict {
  bool holds = true;
  std::vector<int> players;
  std::vector<RoleId> roles;
};

struct RelationProperties {
  std::string name;
  bool role_level;
  PropertyVerdict reflexive;
  PropertyVerdict symmetric;
  PropertyVerdict transitive;
};

// Reflexivity, symmetry and transitivity of B_r, T_r, M_r, B, R, T, M on
// one game. Role relations are checked over all same-arity pairs and
// triples; player relations over distinct pairs and pairwise-distinct
// triples.
struct PropertyReport {
  int players;
  std::vector<RelationProperties> relations;
};

PropertyReport ComputePropertyReport(const Game& game,
                                     Exec exec = Exec::kParallel);

// Identities that must hold on every game. A violation points at a defect,
// except where a check is marked `disputed`.
struct DiagnosticCheck {
  std::string name;
  bool holds;
  std::string detail;
  bool disputed = false;
};

struct Diagnostics {
  std::vector<DiagnosticCheck> checks;

  bool AllHold(bool include_disputed = true) const;
  const DiagnosticCheck& Find(std::string_view name) const;
};

Diagnostics RunDiagnostics(const Game& game, Exec exec = Exec::kParallel);

}  // namespace gamesym

#endif  // GAMESYM_RELATIONS_H_
