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

#ifndef GAMESYM_ROLES_H_
#define GAMESYM_ROLES_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gamesym/game.h"
#include "gamesym/parallel.h"
#include "gamesym/permutation.h"
#include "gamesym/rational.h"

namespace gamesym {

// r_owner^counterpart: what `counterpart` means to `owner`. Diagonal when the
// two coincide.
struct RoleId {
  int owner;
  int counterpart;

  bool diagonal() const { return owner == counterpart; }

  friend bool operator==(const RoleId&, const RoleId&) = default;
  friend auto operator<=>(const RoleId&, const RoleId&) = default;
};

// "r_1^2" with 1-based labels.
std::string ToString(const RoleId& role);

// Materialized role table: for each reduced profile (the other players, in
// index order) the payoff of `owner` as a function of (a_owner,
// a_counterpart), or of a_owner alone for a diagonal role.
class Role {
 public:
  Role(const Game& game, RoleId id);

  RoleId id() const { return id_; }
  std::size_t num_reduced() const { return num_reduced_; }

  // Throws Error(kInvalidQuery) when called with the wrong arity.
  const Rational& At(const ReducedProfile& others, int owner_action,
                     int counterpart_action) const;
  const Rational& At(const ReducedProfile& others, int owner_action) const;

 private:
  std::size_t ReducedIndex(const ReducedProfile& others) const;

  RoleId id_;
  int players_;
  int num_actions_;
  std::size_t num_reduced_;
  std::vector<Rational> table_;  // [reduced][a_owner][a_counterpart]
};

Role ExtractRole(const Game& game, int owner, int counterpart);

enum class RoleRelation { kBlind, kTwisted, kSimulates };

// "B_r", "T_r", "M_r".
std::string_view RoleRelationName(RoleRelation relation);

// pi_i(a) != pi_k(a sigma) for a pinned sigma.
struct RoleCounterexample {
  Profile profile;
  Permutation sigma;
  Rational lhs;  // pi_i(a)
  Rational rhs;  // pi_k(a sigma)
};

struct RoleRelationResult {
  bool holds = false;
  // Twisted: the first pinned permutation that works.
  std::optional<Permutation> witness;
  // Simulation: the pinned permutations, and for each profile index the
  // position in `candidates` of the first one that works (-1 when none).
  std::vector<Permutation> candidates;
  std::vector<int> witness_of_profile;
  // Set when holds is false. Blind: first (profile, sigma) failure in
  // profile-major order. Twisted: the first candidate's failure.
  // Simulation: the first profile no candidate serves, with the first
  // candidate.
  std::optional<RoleCounterexample> counterexample;
  // Twisted only: each rejected candidate with its first failing profile.
  std::vector<RoleCounterexample> rejected;
};

// The relations compare r_i^j with r_k^l through permutations with
// sigma(k) = i and sigma(l) = j (sigma(k) = i alone for diagonal roles),
// via pi_i(a) = pi_k(a sigma). Mixed arity throws Error(kInvalidQuery).
//
//   blind:     every pinned sigma works for every profile;
//   twisted:   one pinned sigma works for every profile;
//   simulates: every profile has a pinned sigma that works.
RoleRelationResult BlindRelated(const Game& game, RoleId lhs, RoleId rhs);
RoleRelationResult TwistedRelated(const Game& game, RoleId lhs, RoleId rhs);
RoleRelationResult Simulates(const Game& game, RoleId lhs, RoleId rhs);
RoleRelationResult Relate(const Game& game, RoleRelation relation, RoleId lhs,
                          RoleId rhs);

// Verdict only, without witnesses or counterexamples.
bool RelationHolds(const Game& game, RoleRelation relation, RoleId lhs,
                   RoleId rhs);

// Pins for comparing lhs with rhs: rhs.owner -> lhs.owner and, for
// non-diagonal roles, rhs.counterpart -> lhs.counterpart.
std::vector<Pin> RolePins(RoleId lhs, RoleId rhs);

// Verdict grid over all ordered pairs of the n*n roles. Pairs of different
// arity have no verdict.
class RoleRelationTable {
 public:
  RoleRelationTable(const Game& game, RoleRelation relation,
                    Exec exec = Exec::kParallel);

  RoleRelation relation() const { return relation_; }
  int players() const { return players_; }
  std::optional<bool> At(RoleId lhs, RoleId rhs) const;

 private:
  std::size_t Slot(RoleId lhs, RoleId rhs) const;

  RoleRelation relation_;
  int players_;
  std::vector<signed char> verdicts_;  // -1 mixed arity, 0 false, 1 true
};

// Equivalence classes of the twisted relation. Diagonal and non-diagonal
// roles never share a class. Members are sorted, classes are ordered by
// their first member.
std::vector<std::vector<RoleId>> TwistedClasses(const Game& game,
                                                Exec exec = Exec::kParallel);

}  // namespace gamesym

#endif  // GAMESYM_ROLES_H_
