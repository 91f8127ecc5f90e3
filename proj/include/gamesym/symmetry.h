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

#ifndef GAMESYM_SYMMETRY_H_
#define GAMESYM_SYMMETRY_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "gamesym/game.h"
#include "gamesym/parallel.h"
#include "gamesym/permutation.h"
#include "gamesym/rational.h"

namespace gamesym {

// Failure of pi_{sigma(i)}(a) = pi_i(a sigma).
struct InvarianceFailure {
  Profile profile;
  int player;
  Rational permuted_payoff;  // pi_{sigma(i)}(a)
  Rational moved_payoff;     // pi_i(a sigma)
};

struct InvarianceResult {
  bool invariant;
  std::optional<InvarianceFailure> counterexample;  // first by profile index
};

InvarianceResult IsInvariant(const Game& game, const Permutation& sigma);

// Every sigma under which the game is invariant, in lexicographic order.
// Candidates are screened with a per-orbit payoff multiset test before the
// full scan; the result always contains the identity and is a group.
std::vector<Permutation> InvarianceGroup(const Game& game,
                                         Exec exec = Exec::kParallel);

// Profiles grouped by commutative image. Classes are ordered by their first
// profile index and list profile indices in increasing order.
struct OrbitPartition {
  std::vector<std::vector<std::size_t>> classes;
  std::vector<int> class_of;  // profile index -> class id
};

OrbitPartition Orbits(const Game& game);
OrbitPartition Orbits(int players, int num_actions);

// Two payoffs that a classification predicate requires to be equal. For the
// image-based predicates, `sigma` is unset; for the permutation-based one it
// is the permutation that exposes the failure.
struct PredicateFailure {
  Profile first;
  int first_player;
  Rational first_payoff;
  Profile second;
  int second_player;
  Rational second_payoff;
  std::optional<Permutation> sigma;
};

struct PredicateVerdict {
  bool holds = true;
  std::optional<PredicateFailure> counterexample;
};

struct Classification {
  PredicateVerdict anonymous;
  PredicateVerdict symmetric;
  PredicateVerdict self_anonymous;
  PredicateVerdict self_symmetric;
  // pi_i(a) = pi_{sigma(i)}(a sigma) for every sigma.
  PredicateVerdict dm_symmetric;
};

Classification Classify(const Game& game, Exec exec = Exec::kParallel);

// A count per action; an element of P_{n-1} when the counts sum to n-1.
using Partition = std::vector<int>;

// All ways of writing `total` as an ordered sum of `parts` non-negative
// integers, first coordinate descending, then recursively.
std::vector<Partition> EnumeratePartitions(int total, int parts);

// Position of `partition` in EnumeratePartitions(total, parts).
std::size_t PartitionIndex(const Partition& partition, int total);

// u^i_a(x): player i's utility for action a when the others' action counts
// are x.
class AnonymousGame {
 public:
  AnonymousGame(int players, std::vector<std::string> actions);

  int players() const { return players_; }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  const std::vector<std::string>& actions() const { return actions_; }
  const std::vector<Partition>& partitions() const { return partitions_; }

  const Rational& Utility(int player, int action,
                          const Partition& others) const;
  void SetUtility(int player, int action, const Partition& others,
                  const Rational& value);

  friend bool operator==(const AnonymousGame&, const AnonymousGame&) = default;

 private:
  std::size_t Slot(int player, int action, const Partition& others) const;

  int players_;
  std::vector<std::string> actions_;
  std::vector<Partition> partitions_;
  std::vector<Rational> utilities_;  // [player][action][partition]
};

// Two profiles where player i plays the same action against the same counts
// but is paid differently.
struct AnonymityConflict {
  int player;
  Profile first;
  Profile second;
  Rational first_payoff;
  Rational second_payoff;
};

struct AnonymousRepresentation {
  std::optional<AnonymousGame> game;
  std::optional<AnonymityConflict> conflict;

  bool ok() const { return game.has_value(); }
};

AnonymousRepresentation ToAnonymous(const Game& game);

// pi_i(a) = u^i_{a_i}(#a_{-i}).
Game FromAnonymous(const AnonymousGame& anonymous);

}  // namespace gamesym

#endif  // GAMESYM_SYMMETRY_H_
