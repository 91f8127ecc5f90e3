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

#ifndef GAMESYM_GAME_H_
#define GAMESYM_GAME_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gamesym/permutation.h"
#include "gamesym/rational.h"

namespace gamesym {

// One action index per player.
struct Profile {
  std::vector<int> actions;

  int size() const { return static_cast<int>(actions.size()); }
  int operator[](int i) const { return actions[i]; }

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

// A profile with the players in `removed` (sorted, one or two entries)
// projected out. actions keeps the remaining players in increasing order.
struct ReducedProfile {
  std::vector<int> actions;
  std::vector<int> removed;

  friend bool operator==(const ReducedProfile&, const ReducedProfile&) =
      default;
};

// counts[x] = number of coordinates playing action x.
struct CommutativeImage {
  std::vector<int> counts;

  friend bool operator==(const CommutativeImage&, const CommutativeImage&) =
      default;
  friend auto operator<=>(const CommutativeImage&, const CommutativeImage&) =
      default;
};

// A finite normal-form game in which every player picks from the same action
// list. Payoffs are stored densely: profiles are numbered in mixed radix with
// player 0 most significant, so profile index order is lexicographic.
class Game {
 public:
  // All payoffs zero. Throws Error(kInvalidQuery) for players < 2, fewer
  // than two actions, or duplicate action names.
  Game(int players, std::vector<std::string> actions);

  int players() const { return players_; }
  int num_actions() const { return static_cast<int>(actions_.size()); }
  std::size_t num_profiles() const { return num_profiles_; }
  const std::vector<std::string>& actions() const { return actions_; }

  // Index of player p's digit weight, s^(n-1-p).
  std::size_t stride(int player) const { return strides_[player]; }

  std::size_t IndexOf(const Profile& profile) const;
  Profile ProfileAt(std::size_t index) const;

  std::span<const Rational> Payoffs(std::size_t index) const {
    return {payoffs_.data() + index * players_,
            static_cast<std::size_t>(players_)};
  }
  std::span<const Rational> Payoffs(const Profile& profile) const {
    return Payoffs(IndexOf(profile));
  }
  const Rational& PayoffOf(int player, std::size_t index) const {
    return payoffs_[index * players_ + player];
  }
  const Rational& PayoffOf(int player, const Profile& profile) const;

  void SetPayoffs(const Profile& profile, std::span<const Rational> values);
  void SetPayoff(int player, const Profile& profile, const Rational& value);

  // Lookup by name; throws Error(kUnknownName).
  int ActionIndex(std::string_view name) const;
  // "a,b,c" (whitespace around names ignored) -> profile.
  Profile ParseProfile(std::string_view text) const;
  // "(a,b,c)".
  std::string FormatProfile(const Profile& profile) const;
  // "a,b,c", the key used by the game file format.
  std::string ProfileKey(const Profile& profile) const;

  friend bool operator==(const Game&, const Game&) = default;

 private:
  void CheckProfile(const Profile& profile) const;

  int players_;
  std::vector<std::string> actions_;
  std::vector<std::size_t> strides_;
  std::size_t num_profiles_;
  std::vector<Rational> payoffs_;  // [profile][player]
};

// (a sigma)_i = a_{sigma(i)}.
Profile Act(const Profile& a, const Permutation& sigma);

// Index of (a sigma) given the digits of a; no allocation.
std::size_t ActIndex(const Game& game, std::span<const int> actions,
                     const Permutation& sigma);

CommutativeImage ImageOf(std::span<const int> actions, int num_actions);
inline CommutativeImage ImageOf(const Profile& a, int num_actions) {
  return ImageOf(a.actions, num_actions);
}
inline CommutativeImage ImageOf(const ReducedProfile& a, int num_actions) {
  return ImageOf(a.actions, num_actions);
}

// The canonical sigma with a = b sigma, built by matching each a_i to the
// first unused index of b carrying the same action. Empty iff the
// commutative images differ.
std::optional<Permutation> WitnessPermutation(const Profile& a,
                                              const Profile& b);

// removed holds one index or two distinct indices, in any order.
ReducedProfile Restrict(const Profile& a, std::span<const int> removed);
// values[k] is the action placed at the k-th entry of r.removed.
Profile Extend(const ReducedProfile& r, std::span<const int> values);

// Steps `actions` to the next profile in index order; false after the last.
bool NextProfile(std::vector<int>& actions, int num_actions);

}  // namespace gamesym

#endif  // GAMESYM_GAME_H_
