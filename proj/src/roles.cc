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

#include <algorithm>
#include <numeric>

#include "gamesym/error.h"

namespace gamesym {
namespace {

void CheckRole(const Game& game, RoleId role) {
  const int n = game.players();
  if (role.owner < 0 || role.owner >= n || role.counterpart < 0 ||
      role.counterpart >= n) {
    throw Error(ErrorCode::kOutOfRange,
                "role " + ToString(role) + " names a player outside 1.." +
                    std::to_string(n));
  }
}

void CheckPair(const Game& game, RoleId lhs, RoleId rhs) {
  CheckRole(game, lhs);
  CheckRole(game, rhs);
  if (lhs.diagonal() != rhs.diagonal()) {
    throw Error(ErrorCode::kInvalidQuery,
                "cannot relate " + ToString(lhs) + " with " + ToString(rhs) +
                    ": roles of different arity");
  }
}

// Index of the first profile where pi_i(a) != pi_k(a sigma), or
// num_profiles.
std::size_t FirstFailure(const Game& game, int i, int k,
                         const Permutation& sigma) {
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    if (game.PayoffOf(i, index) !=
        game.PayoffOf(k, ActIndex(game, actions, sigma))) {
      return index;
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return index;
}

RoleCounterexample MakeCounterexample(const Game& game, int i, int k,
                                      std::size_t index,
                                      const Permutation& sigma) {
  const Profile a = game.ProfileAt(index);
  return {a, sigma, game.PayoffOf(i, index), game.PayoffOf(k, Act(a, sigma))};
}

// pi_k(b h) = pi_k(b) for every h fixing `fixed` pointwise. Checking the
// adjacent transpositions of the free points is enough: they generate the
// pointwise stabilizer, and the set of h preserving pi_k is a group.
bool FixedPointInvariant(const Game& game, int k, std::span<const int> fixed) {
  std::vector<int> free_points;
  for (int p = 0; p < game.players(); ++p) {
    if (std::find(fixed.begin(), fixed.end(), p) == fixed.end()) {
      free_points.push_back(p);
    }
  }
  for (std::size_t t = 0; t + 1 < free_points.size(); ++t) {
    const Permutation h = Permutation::Transposition(
        game.players(), free_points[t], free_points[t + 1]);
    if (FirstFailure(game, k, k, h) != game.num_profiles()) return false;
  }
  return true;
}

bool BlindHolds(const Game& game, RoleId lhs, RoleId rhs) {
  const std::vector<Pin> pins = RolePins(lhs, rhs);
  // Pinned set = sigma0 * Stab(rhs points): the relation holds iff sigma0
  // works and pi_k is invariant under that stabilizer.
  std::optional<Permutation> first;
  ForEachConstrained(game.players(), pins, [&](const Permutation& p) {
    first = p;
    return false;
  });
  if (FirstFailure(game, lhs.owner, rhs.owner, *first) !=
      game.num_profiles()) {
    return false;
  }
  std::vector<int> fixed{rhs.owner};
  if (!rhs.diagonal()) fixed.push_back(rhs.counterpart);
  return FixedPointInvariant(game, rhs.owner, fixed);
}

}  // namespace

std::string ToString(const RoleId& role) {
  return "r_" + std::to_string(role.owner + 1) + "^" +
         std::to_string(role.counterpart + 1);
}

Role::Role(const Game& game, RoleId id)
    : id_(id), players_(game.players()), num_actions_(game.num_actions()) {
  CheckRole(game, id);
  const int removed = id.diagonal() ? 1 : 2;
  num_reduced_ = 1;
  for (int k = 0; k < players_ - removed; ++k) num_reduced_ *= num_actions_;
  const std::size_t width = id.diagonal() ? 1 : num_actions_;
  table_.assign(num_reduced_ * num_actions_ * width, Rational(0));

  std::vector<int> actions(players_, 0);
  std::size_t index = 0;
  do {
    std::size_t reduced = 0;
    for (int p = 0; p < players_; ++p) {
      if (p == id.owner || p == id.counterpart) continue;
      reduced = reduced * num_actions_ + actions[p];
    }
    const std::size_t column = id.diagonal() ? 0 : actions[id.counterpart];
    table_[(reduced * num_actions_ + actions[id.owner]) * width + column] =
        game.PayoffOf(id.owner, index);
    ++index;
  } while (NextProfile(actions, num_actions_));
}

std::size_t Role::ReducedIndex(const ReducedProfile& others) const {
  std::vector<int> expected{id_.owner};
  if (!id_.diagonal()) expected.push_back(id_.counterpart);
  std::sort(expected.begin(), expected.end());
  if (others.removed != expected) {
    throw Error(ErrorCode::kInvalidQuery,
                "reduced profile does not match role " + ToString(id_));
  }
  if (others.actions.size() + expected.size() !=
      static_cast<std::size_t>(players_)) {
    throw Error(ErrorCode::kSizeMismatch, "reduced profile has wrong length");
  }
  std::size_t reduced = 0;
  for (int a : others.actions) {
    if (a < 0 || a >= num_actions_) {
      throw Error(ErrorCode::kOutOfRange, "action index out of range");
    }
    reduced = reduced * num_actions_ + a;
  }
  return reduced;
}

const Rational& Role::At(const ReducedProfile& others, int owner_action,
                         int counterpart_action) const {
  if (id_.diagonal()) {
    throw Error(ErrorCode::kInvalidQuery,
                ToString(id_) + " is diagonal and takes one action");
  }
  if (owner_action < 0 || owner_action >= num_actions_ ||
      counterpart_action < 0 || counterpart_action >= num_actions_) {
    throw Error(ErrorCode::kOutOfRange, "action index out of range");
  }
  return table_[(ReducedIndex(others) * num_actions_ + owner_action) *
                    num_actions_ +
                counterpart_action];
}

const Rational& Role::At(const ReducedProfile& others, int owner_action) const {
  if (!id_.diagonal()) {
    throw Error(ErrorCode::kInvalidQuery,
                ToString(id_) + " is not diagonal and takes two actions");
  }
  if (owner_action < 0 || owner_action >= num_actions_) {
    throw Error(ErrorCode::kOutOfRange, "action index out of range");
  }
  return table_[ReducedIndex(others) * num_actions_ + owner_action];
}

Role ExtractRole(const Game& game, int owner, int counterpart) {
  return Role(game, RoleId{owner, counterpart});
}

std::string_view RoleRelationName(RoleRelation relation) {
  switch (relation) {
    case RoleRelation::kBlind:
      return "B_r";
    case RoleRelation::kTwisted:
      return "T_r";
    case RoleRelation::kSimulates:
      return "M_r";
  }
  return "?";
}

std::vector<Pin> RolePins(RoleId lhs, RoleId rhs) {
  std::vector<Pin> pins{{rhs.owner, lhs.owner}};
  if (!rhs.diagonal()) pins.push_back({rhs.counterpart, lhs.counterpart});
  return pins;
}

RoleRelationResult BlindRelated(const Game& game, RoleId lhs, RoleId rhs) {
  CheckPair(game, lhs, rhs);
  RoleRelationResult result;
  if (BlindHolds(game, lhs, rhs)) {
    result.holds = true;
    return result;
  }
  // Profile-major scan for the first failing (profile, sigma).
  const std::vector<Permutation> candidates =
      EnumerateConstrained(game.players(), RolePins(lhs, rhs));
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    for (const auto& sigma : candidates) {
      if (game.PayoffOf(lhs.owner, index) !=
          game.PayoffOf(rhs.owner, ActIndex(game, actions, sigma))) {
        result.counterexample =
            MakeCounterexample(game, lhs.owner, rhs.owner, index, sigma);
        return result;
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  throw Error(ErrorCode::kInvalidQuery,
              "internal: blind relation failed without a counterexample");
}

RoleRelationResult TwistedRelated(const Game& game, RoleId lhs, RoleId rhs) {
  CheckPair(game, lhs, rhs);
  RoleRelationResult result;
  ForEachConstrained(
      game.players(), RolePins(lhs, rhs), [&](const Permutation& sigma) {
        const std::size_t failure =
            FirstFailure(game, lhs.owner, rhs.owner, sigma);
        if (failure == game.num_profiles()) {
          result.holds = true;
          result.witness = sigma;
          return false;
        }
        result.rejected.push_back(
            MakeCounterexample(game, lhs.owner, rhs.owner, failure, sigma));
        return true;
      });
  if (!result.holds) result.counterexample = result.rejected.front();
  return result;
}

RoleRelationResult Simulates(const Game& game, RoleId lhs, RoleId rhs) {
  CheckPair(game, lhs, rhs);
  RoleRelationResult result;
  result.candidates = EnumerateConstrained(game.players(), RolePins(lhs, rhs));
  result.witness_of_profile.assign(game.num_profiles(), -1);
  result.holds = true;
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const Rational& target = game.PayoffOf(lhs.owner, index);
    for (std::size_t c = 0; c < result.candidates.size(); ++c) {
      if (game.PayoffOf(rhs.owner,
                        ActIndex(game, actions, result.candidates[c])) ==
          target) {
        result.witness_of_profile[index] = static_cast<int>(c);
        break;
      }
    }
    if (result.witness_of_profile[index] < 0 && result.holds) {
      result.holds = false;
      result.counterexample = MakeCounterexample(
          game, lhs.owner, rhs.owner, index, result.candidates.front());
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return result;
}

RoleRelationResult Relate(const Game& game, RoleRelation relation, RoleId lhs,
                          RoleId rhs) {
  switch (relation) {
    case RoleRelation::kBlind:
      return BlindRelated(game, lhs, rhs);
    case RoleRelation::kTwisted:
      return TwistedRelated(game, lhs, rhs);
    case RoleRelation::kSimulates:
      return Simulates(game, lhs, rhs);
  }
  throw Error(ErrorCode::kInvalidQuery, "unknown role relation");
}

bool RelationHolds(const Game& game, RoleRelation relation, RoleId lhs,
                   RoleId rhs) {
  CheckPair(game, lhs, rhs);
  const std::vector<Pin> pins = RolePins(lhs, rhs);
  switch (relation) {
    case RoleRelation::kBlind:
      return BlindHolds(game, lhs, rhs);
    case RoleRelation::kTwisted: {
      bool found = false;
      ForEachConstrained(game.players(), pins, [&](const Permutation& sigma) {
        found = FirstFailure(game, lhs.owner, rhs.owner, sigma) ==
                game.num_profiles();
        return !found;
      });
      return found;
    }
    case RoleRelation::kSimulates: {
      const auto candidates = EnumerateConstrained(game.players(), pins);
      std::vector<int> actions(game.players(), 0);
      std::size_t index = 0;
      do {
        const Rational& target = game.PayoffOf(lhs.owner, index);
        const bool served = std::any_of(
            candidates.begin(), candidates.end(), [&](const Permutation& c) {
              return game.PayoffOf(rhs.owner, ActIndex(game, actions, c)) ==
                     target;
            });
        if (!served) return false;
        ++index;
      } while (NextProfile(actions, game.num_actions()));
      return true;
    }
  }
  throw Error(ErrorCode::kInvalidQuery, "unknown role relation");
}

RoleRelationTable::RoleRelationTable(const Game& game, RoleRelation relation,
                                     Exec exec)
    : relation_(relation), players_(game.players()) {
  const std::size_t roles = static_cast<std::size_t>(players_) * players_;
  verdicts_.assign(roles * roles, -1);
  ParallelFor(roles * roles, exec, [&](std::size_t slot) {
    const std::size_t l = slot / roles;
    const std::size_t r = slot % roles;
    const RoleId lhs{static_cast<int>(l / players_),
                     static_cast<int>(l % players_)};
    const RoleId rhs{static_cast<int>(r / players_),
                     static_cast<int>(r % players_)};
    if (lhs.diagonal() != rhs.diagonal()) return;
    verdicts_[slot] = RelationHolds(game, relation, lhs, rhs) ? 1 : 0;
  });
}

std::size_t RoleRelationTable::Slot(RoleId lhs, RoleId rhs) const {
  const std::size_t roles = static_cast<std::size_t>(players_) * players_;
  return (static_cast<std::size_t>(lhs.owner) * players_ + lhs.counterpart) *
             roles +
         static_cast<std::size_t>(rhs.owner) * players_ + rhs.counterpart;
}

std::optional<bool> RoleRelationTable::At(RoleId lhs, RoleId rhs) const {
  const signed char v = verdicts_.at(Slot(lhs, rhs));
  if (v < 0) return std::nullopt;
  return v == 1;
}

std::vector<std::vector<RoleId>> TwistedClasses(const Game& game, Exec exec) {
  const int n = game.players();
  const RoleRelationTable table(game, RoleRelation::kTwisted, exec);
  const int roles = n * n;
  std::vector<int> parent(roles);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int a = 0; a < roles; ++a) {
    for (int b = a + 1; b < roles; ++b) {
      const auto v = table.At({a / n, a % n}, {b / n, b % n});
      if (v && *v) {
        const int ra = find(a);
        const int rb = find(b);
        if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
      }
    }
  }
  std::vector<std::vector<RoleId>> classes;
  std::vector<int> class_of_root(roles, -1);
  for (int a = 0; a < roles; ++a) {
    const int root = find(a);
    if (class_of_root[root] < 0) {
      class_of_root[root] = static_cast<int>(classes.size());
      classes.emplace_back();
    }
    classes[class_of_root[root]].push_back({a / n, a % n});
  }
  return classes;
}

}  // namespace gamesym
