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

#include "gamesym/game.h"

#include <algorithm>
#include <cctype>
#include <set>

#include "gamesym/error.h"

namespace gamesym {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Game::Game(int players, std::vector<std::string> actions)
    : players_(players), actions_(std::move(actions)) {
  if (players_ < 2) {
    throw Error(ErrorCode::kInvalidQuery, "a game needs at least 2 players");
  }
  if (actions_.size() < 2) {
    throw Error(ErrorCode::kInvalidQuery, "a game needs at least 2 actions");
  }
  std::set<std::string> seen;
  for (const auto& name : actions_) {
    if (name.empty() || name.find(',') != std::string::npos ||
        Trim(name) != name) {
      throw Error(ErrorCode::kInvalidQuery,
                  "invalid action name '" + name + "'");
    }
    if (!seen.insert(name).second) {
      throw Error(ErrorCode::kInvalidQuery,
                  "duplicate action name '" + name + "'");
    }
  }
  strides_.assign(players_, 1);
  for (int p = players_ - 2; p >= 0; --p) {
    strides_[p] = strides_[p + 1] * actions_.size();
  }
  num_profiles_ = strides_[0] * actions_.size();
  payoffs_.assign(num_profiles_ * players_, Rational(0));
}

void Game::CheckProfile(const Profile& profile) const {
  if (profile.size() != players_) {
    throw Error(ErrorCode::kSizeMismatch,
                "profile has " + std::to_string(profile.size()) +
                    " coordinates, game has " + std::to_string(players_) +
                    " players");
  }
  for (int a : profile.actions) {
    if (a < 0 || a >= num_actions()) {
      throw Error(ErrorCode::kOutOfRange, "action index out of range");
    }
  }
}

std::size_t Game::IndexOf(const Profile& profile) const {
  CheckProfile(profile);
  std::size_t index = 0;
  for (int p = 0; p < players_; ++p) index += profile[p] * strides_[p];
  return index;
}

Profile Game::ProfileAt(std::size_t index) const {
  if (index >= num_profiles_) {
    throw Error(ErrorCode::kOutOfRange, "profile index out of range");
  }
  Profile profile{std::vector<int>(players_)};
  for (int p = 0; p < players_; ++p) {
    profile.actions[p] = static_cast<int>(index / strides_[p]);
    index %= strides_[p];
  }
  return profile;
}

const Rational& Game::PayoffOf(int player, const Profile& profile) const {
  if (player < 0 || player >= players_) {
    throw Error(ErrorCode::kOutOfRange, "player index out of range");
  }
  return PayoffOf(player, IndexOf(profile));
}

void Game::SetPayoffs(const Profile& profile,
                      std::span<const Rational> values) {
  if (values.size() != static_cast<std::size_t>(players_)) {
    throw Error(ErrorCode::kSizeMismatch,
                "payoff vector has " + std::to_string(values.size()) +
                    " entries, expected " + std::to_string(players_));
  }
  const std::size_t index = IndexOf(profile);
  std::copy(values.begin(), values.end(), payoffs_.begin() + index * players_);
}

void Game::SetPayoff(int player, const Profile& profile,
                     const Rational& value) {
  if (player < 0 || player >= players_) {
    throw Error(ErrorCode::kOutOfRange, "player index out of range");
  }
  payoffs_[IndexOf(profile) * players_ + player] = value;
}

int Game::ActionIndex(std::string_view name) const {
  for (int k = 0; k < num_actions(); ++k) {
    if (actions_[k] == name) return k;
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown action '" + std::string(name) + "'");
}

Profile Game::ParseProfile(std::string_view text) const {
  Profile profile;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view part = Trim(text.substr(
        start, comma == std::string_view::npos ? std::string_view::npos
                                               : comma - start));
    profile.actions.push_back(ActionIndex(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  CheckProfile(profile);
  return profile;
}

std::string Game::ProfileKey(const Profile& profile) const {
  std::string out;
  for (int p = 0; p < profile.size(); ++p) {
    if (p) out += ',';
    out += actions_.at(profile[p]);
  }
  return out;
}

std::string Game::FormatProfile(const Profile& profile) const {
  return "(" + ProfileKey(profile) + ")";
}

Profile Act(const Profile& a, const Permutation& sigma) {
  if (a.size() != sigma.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "profile and permutation sizes differ");
  }
  Profile out{std::vector<int>(a.size())};
  for (int i = 0; i < a.size(); ++i) out.actions[i] = a[sigma(i)];
  return out;
}

std::size_t ActIndex(const Game& game, std::span<const int> actions,
                     const Permutation& sigma) {
  std::size_t index = 0;
  for (int i = 0; i < game.players(); ++i) {
    index += actions[sigma(i)] * game.stride(i);
  }
  return index;
}

CommutativeImage ImageOf(std::span<const int> actions, int num_actions) {
  CommutativeImage image{std::vector<int>(num_actions, 0)};
  for (int a : actions) ++image.counts.at(a);
  return image;
}

std::optional<Permutation> WitnessPermutation(const Profile& a,
                                              const Profile& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kSizeMismatch, "profiles differ in length");
  }
  const int n = a.size();
  std::vector<bool> used(n, false);
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) {
    int k = 0;
    while (k < n && (used[k] || b[k] != a[i])) ++k;
    if (k == n) return std::nullopt;
    used[k] = true;
    images[i] = k;
  }
  return Permutation::FromImages(std::move(images));
}

ReducedProfile Restrict(const Profile& a, std::span<const int> removed) {
  std::vector<int> sorted(removed.begin(), removed.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.empty() || sorted.size() > 2) {
    throw Error(ErrorCode::kInvalidQuery,
                "restrict removes one or two players");
  }
  if (sorted.size() == 2 && sorted[0] == sorted[1]) {
    throw Error(ErrorCode::kInvalidQuery, "duplicate removed player");
  }
  for (int r : sorted) {
    if (r < 0 || r >= a.size()) {
      throw Error(ErrorCode::kOutOfRange, "removed player out of range");
    }
  }
  ReducedProfile out;
  out.removed = sorted;
  for (int i = 0; i < a.size(); ++i) {
    if (std::find(sorted.begin(), sorted.end(), i) == sorted.end()) {
      out.actions.push_back(a[i]);
    }
  }
  return out;
}

Profile Extend(const ReducedProfile& r, std::span<const int> values) {
  if (values.size() != r.removed.size()) {
    throw Error(ErrorCode::kSizeMismatch,
                "one value is needed per removed player");
  }
  const int n = static_cast<int>(r.actions.size() + r.removed.size());
  Profile out{std::vector<int>(n)};
  std::size_t next = 0;
  for (int i = 0; i < n; ++i) {
    const auto it = std::find(r.removed.begin(), r.removed.end(), i);
    if (it != r.removed.end()) {
      out.actions[i] = values[it - r.removed.begin()];
    } else {
      if (next >= r.actions.size()) {
        throw Error(ErrorCode::kOutOfRange, "removed player out of range");
      }
      out.actions[i] = r.actions[next++];
    }
  }
  return out;
}

bool NextProfile(std::vector<int>& actions, int num_actions) {
  for (int p = static_cast<int>(actions.size()) - 1; p >= 0; --p) {
    if (++actions[p] < num_actions) return true;
    actions[p] = 0;
  }
  return false;
}

}  // namespace gamesym
