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

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gamesym/error.h"

namespace gamesym::oracle {
namespace {

std::vector<std::vector<int>> AllProfiles(const Game& game) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(game.players(), 0);
  while (true) {
    out.push_back(a);
    int p = game.players() - 1;
    while (p >= 0 && a[p] == game.num_actions() - 1) a[p--] = 0;
    if (p < 0) break;
    ++a[p];
  }
  return out;
}

std::vector<Images> AllImages(int n) {
  std::vector<Images> out;
  Images sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<int> Apply(const std::vector<int>& a, const Images& sigma) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[sigma[i]];
  return out;
}

Rational Pay(const Game& game, int player, const std::vector<int>& a) {
  return game.PayoffOf(player, Profile{a});
}

std::vector<int> Counts(const std::vector<int>& a, int s, int skip) {
  std::vector<int> c(s, 0);
  for (int p = 0; p < static_cast<int>(a.size()); ++p) {
    if (p != skip) ++c[a[p]];
  }
  return c;
}

void Guard(const Game& game) { CheckGuard(game.players(), game.num_actions()); }

// Does pi_i(a) = pi_k(a sigma) hold for every profile a?
bool AllProfilesAgree(const Game& game,
                      const std::vector<std::vector<int>>& profiles, int i,
                      int k, const Images& sigma) {
  for (const auto& a : profiles) {
    if (Pay(game, i, a) != Pay(game, k, Apply(a, sigma))) return false;
  }
  return true;
}

bool Pinned(const Images& sigma, RoleId lhs, RoleId rhs) {
  if (sigma[rhs.owner] != lhs.owner) return false;
  return rhs.diagonal() || sigma[rhs.counterpart] == lhs.counterpart;
}

}  // namespace

void CheckGuard(int players, int actions) {
  if (players < 2 || players > 7 || actions < 2 || actions > 4) {
    throw Error(ErrorCode::kGuard,
                "reference checks are limited to 2..7 players and 2..4 "
                "actions (got " +
                    std::to_string(players) + " players, " +
                    std::to_string(actions) + " actions)");
  }
}

bool NaiveInvariant(const Game& game, const Images& sigma) {
  Guard(game);
  for (const auto& a : AllProfiles(game)) {
    const auto moved = Apply(a, sigma);
    for (int i = 0; i < game.players(); ++i) {
      if (Pay(game, sigma[i], a) != Pay(game, i, moved)) return false;
    }
  }
  return true;
}

std::vector<Images> NaiveInvarianceGroup(const Game& game) {
  std::vector<Images> out;
  for (const auto& sigma : AllImages(game.players())) {
    if (NaiveInvariant(game, sigma)) out.push_back(sigma);
  }
  return out;
}

std::vector<std::vector<std::size_t>> NaiveOrbits(const Game& game) {
  Guard(game);
  std::vector<std::vector<std::size_t>> out;
  std::set<std::size_t> placed;
  for (const auto& a : AllProfiles(game)) {
    const std::size_t index = game.IndexOf(Profile{a});
    if (placed.count(index)) continue;
    std::set<std::size_t> orbit;
    for (const auto& sigma : AllImages(game.players())) {
      orbit.insert(game.IndexOf(Profile{Apply(a, sigma)}));
    }
    placed.insert(orbit.begin(), orbit.end());
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

bool NaiveAnonymous(const Game& game) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  const int s = game.num_actions();
  for (int i = 0; i < game.players(); ++i) {
    for (const auto& a : profiles) {
      for (const auto& b : profiles) {
        if (a[i] == b[i] && Counts(a, s, i) == Counts(b, s, i) &&
            Pay(game, i, a) != Pay(game, i, b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool NaiveSymmetric(const Game& game) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  const int s = game.num_actions();
  for (int i = 0; i < game.players(); ++i) {
    for (int j = 0; j < game.players(); ++j) {
      for (const auto& a : profiles) {
        for (const auto& b : profiles) {
          if (a[i] == b[j] && Counts(a, s, i) == Counts(b, s, j) &&
              Pay(game, i, a) != Pay(game, j, b)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool NaiveSelfAnonymous(const Game& game) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  const int s = game.num_actions();
  for (int i = 0; i < game.players(); ++i) {
    for (const auto& a : profiles) {
      for (const auto& b : profiles) {
        if (Counts(a, s, -1) == Counts(b, s, -1) &&
            Pay(game, i, a) != Pay(game, i, b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool NaiveSelfSymmetric(const Game& game) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  const int s = game.num_actions();
  for (int i = 0; i < game.players(); ++i) {
    for (int j = 0; j < game.players(); ++j) {
      for (const auto& a : profiles) {
        for (const auto& b : profiles) {
          if (Counts(a, s, -1) == Counts(b, s, -1) &&
              Pay(game, i, a) != Pay(game, j, b)) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

bool NaiveDmSymmetric(const Game& game) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  for (const auto& sigma : AllImages(game.players())) {
    for (const auto& a : profiles) {
      const auto moved = Apply(a, sigma);
      for (int i = 0; i < game.players(); ++i) {
        if (Pay(game, i, a) != Pay(game, sigma[i], moved)) return false;
      }
    }
  }
  return true;
}

bool NaiveRoleRelation(const Game& game, RoleRelation relation, RoleId lhs,
                       RoleId rhs) {
  Guard(game);
  if (lhs.diagonal() != rhs.diagonal()) {
    throw Error(ErrorCode::kInvalidQuery, "roles of different arity");
  }
  const auto profiles = AllProfiles(game);
  std::vector<Images> pinned;
  for (const auto& sigma : AllImages(game.players())) {
    if (Pinned(sigma, lhs, rhs)) pinned.push_back(sigma);
  }
  const int i = lhs.owner;
  const int k = rhs.owner;
  switch (relation) {
    case RoleRelation::kBlind:
      for (const auto& sigma : pinned) {
        if (!AllProfilesAgree(game, profiles, i, k, sigma)) return false;
      }
      return true;
    case RoleRelation::kTwisted:
      for (const auto& sigma : pinned) {
        if (AllProfilesAgree(game, profiles, i, k, sigma)) return true;
      }
      return false;
    case RoleRelation::kSimulates:
      for (const auto& a : profiles) {
        bool served = false;
        for (const auto& sigma : pinned) {
          if (Pay(game, i, a) == Pay(game, k, Apply(a, sigma))) {
            served = true;
            break;
          }
        }
        if (!served) return false;
      }
      return true;
  }
  return false;
}

bool NaiveRigid(const Game& game, int i, int j) {
  Guard(game);
  Images swap(game.players());
  std::iota(swap.begin(), swap.end(), 0);
  std::swap(swap[i], swap[j]);
  return AllProfilesAgree(game, AllProfiles(game), i, j, swap);
}

bool NaivePlayerRelation(const Game& game, PlayerRelation relation, int i,
                         int j) {
  auto role_x = [](PlayerRelation r) {
    switch (r) {
      case PlayerRelation::kPB:
      case PlayerRelation::kQB:
        return RoleRelation::kBlind;
      case PlayerRelation::kPT:
      case PlayerRelation::kQT:
        return RoleRelation::kTwisted;
      default:
        return RoleRelation::kSimulates;
    }
  };
  const int n = game.players();
  switch (relation) {
    case PlayerRelation::kB:
      return NaiveRoleRelation(game, RoleRelation::kBlind, {i, j}, {j, i});
    case PlayerRelation::kR:
      return NaiveRigid(game, i, j);
    case PlayerRelation::kT:
      return NaiveRoleRelation(game, RoleRelation::kTwisted, {i, j}, {j, i});
    case PlayerRelation::kM:
      return NaiveRoleRelation(game, RoleRelation::kSimulates, {i, j}, {j, i});
    case PlayerRelation::kPB:
    case PlayerRelation::kPT:
    case PlayerRelation::kPM: {
      const RoleRelation x = role_x(relation);
      for (const auto& tau : AllImages(n)) {
        if (tau[i] != j) continue;
        bool all = true;
        for (int k = 0; k < n && all; ++k) {
          all = NaiveRoleRelation(game, x, {i, k}, {j, tau[k]});
        }
        if (all) return true;
      }
      return false;
    }
    case PlayerRelation::kQB:
    case PlayerRelation::kQT:
    case PlayerRelation::kQM: {
      const RoleRelation x = role_x(relation);
      if (!NaiveRoleRelation(game, x, {i, i}, {j, j})) return false;
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        bool some = false;
        for (int l = 0; l < n && !some; ++l) {
          some = l != j && NaiveRoleRelation(game, x, {i, k}, {j, l});
        }
        if (!some) return false;
      }
      return true;
    }
  }
  return false;
}

bool NaivePBCharacterization(const Game& game, int i, int j) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  for (const auto& sigma : AllImages(game.players())) {
    if (sigma[j] == i && AllProfilesAgree(game, profiles, i, j, sigma)) {
      return true;
    }
  }
  return false;
}

bool NaiveQBCharacterization(const Game& game, int i, int j) {
  Guard(game);
  const auto profiles = AllProfiles(game);
  for (const auto& sigma : AllImages(game.players())) {
    if (sigma[j] == i && !AllProfilesAgree(game, profiles, i, j, sigma)) {
      return false;
    }
  }
  return true;
}

std::string_view ModeName(GeneratorMode mode) {
  switch (mode) {
    case GeneratorMode::kGeneral:
      return "general";
    case GeneratorMode::kAnonymous:
      return "anonymous";
    case GeneratorMode::kSelfSymmetric:
      return "self_symmetric";
  }
  return "?";
}

GeneratorMode ParseMode(std::string_view name) {
  for (GeneratorMode m : {GeneratorMode::kGeneral, GeneratorMode::kAnonymous,
                          GeneratorMode::kSelfSymmetric}) {
    if (ModeName(m) == name) return m;
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown generator mode '" + std::string(name) +
                  "' (expected general, anonymous or self_symmetric)");
}

namespace {

class PayoffSource {
 public:
  explicit PayoffSource(const GeneratorConfig& config)
      : engine_(config.seed),
        min_(config.min_payoff),
        span_(static_cast<std::uint64_t>(config.max_payoff -
                                         config.min_payoff) +
              1) {}

  Rational Next() {
    return Rational(min_ + static_cast<std::int64_t>(engine_() % span_));
  }

 private:
  std::mt19937_64 engine_;
  std::int64_t min_;
  std::uint64_t span_;
};

std::vector<std::string> ActionNames(int count) {
  std::vector<std::string> names;
  for (int k = 0; k < count; ++k) names.push_back(std::string(1, 'a' + k));
  return names;
}

void CheckConfig(const GeneratorConfig& config) {
  CheckGuard(config.players, config.actions);
  if (config.min_payoff > config.max_payoff) {
    throw Error(ErrorCode::kGuard, "payoff range is empty");
  }
}

}  // namespace

AnonymousGame GenerateUtilities(const GeneratorConfig& config) {
  CheckConfig(config);
  PayoffSource source(config);
  AnonymousGame u(config.players, ActionNames(config.actions));
  for (int i = 0; i < config.players; ++i) {
    for (int a = 0; a < config.actions; ++a) {
      for (const auto& x : u.partitions()) u.SetUtility(i, a, x, source.Next());
    }
  }
  return u;
}

Game Generate(const GeneratorConfig& config) {
  CheckConfig(config);
  switch (config.mode) {
    case GeneratorMode::kAnonymous:
      return FromAnonymous(GenerateUtilities(config));
    case GeneratorMode::kGeneral: {
      PayoffSource source(config);
      Game game(config.players, ActionNames(config.actions));
      for (std::size_t index = 0; index < game.num_profiles(); ++index) {
        const Profile a = game.ProfileAt(index);
        for (int i = 0; i < config.players; ++i) {
          game.SetPayoff(i, a, source.Next());
        }
      }
      return game;
    }
    case GeneratorMode::kSelfSymmetric: {
      PayoffSource source(config);
      Game game(config.players, ActionNames(config.actions));
      std::map<std::vector<int>, Rational> value_of_orbit;
      for (std::size_t index = 0; index < game.num_profiles(); ++index) {
        const Profile a = game.ProfileAt(index);
        const auto counts = Counts(a.actions, config.actions, -1);
        auto it = value_of_orbit.find(counts);
        if (it == value_of_orbit.end()) {
          it = value_of_orbit.emplace(counts, source.Next()).first;
        }
        for (int i = 0; i < config.players; ++i) {
          game.SetPayoff(i, a, it->second);
        }
      }
      return game;
    }
  }
  throw Error(ErrorCode::kUnknownName, "unknown generator mode");
}

std::vector<std::string> GeneratorHeader(const GeneratorConfig& config) {
  return {
      "generated by gamesym generate",
      "mode=" + std::string(ModeName(config.mode)) +
          " players=" + std::to_string(config.players) +
          " actions=" + std::to_string(config.actions) +
          " seed=" + std::to_string(config.seed) + " payoffs=[" +
          std::to_string(config.min_payoff) + "," +
          std::to_string(config.max_payoff) + "]",
      "prng=std::mt19937_64(seed); payoff = min + draw mod (max - min + 1)",
  };
}

}  // namespace gamesym::oracle
