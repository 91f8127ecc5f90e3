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

#include "gamesym/symmetry.h"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_map>

#include "gamesym/error.h"

namespace gamesym {
namespace {

// Packs the action counts of `actions` (skipping position `skip`, or none
// when skip < 0) into one integer, base players + 1.
std::uint64_t ImageCode(std::span<const int> actions, int num_actions,
                        int skip) {
  std::vector<int> counts(num_actions, 0);
  for (int p = 0; p < static_cast<int>(actions.size()); ++p) {
    if (p != skip) ++counts[actions[p]];
  }
  const std::uint64_t base = actions.size() + 1;
  std::uint64_t code = 0;
  for (int c : counts) code = code * base + c;
  return code;
}

struct Seen {
  Rational payoff;
  std::size_t profile;
  int player;
};

// Scans profiles in index order and players in order; every (key, payoff)
// pair must agree with the first payoff recorded under that key.
template <class KeyFn>
PredicateVerdict ScanForConflict(const Game& game, KeyFn key_of) {
  std::unordered_map<std::uint64_t, Seen> seen;
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    for (int i = 0; i < game.players(); ++i) {
      const std::uint64_t key = key_of(actions, i);
      const Rational& payoff = game.PayoffOf(i, index);
      auto [it, inserted] = seen.try_emplace(key, Seen{payoff, index, i});
      if (!inserted && it->second.payoff != payoff) {
        return PredicateVerdict{
            false, PredicateFailure{game.ProfileAt(it->second.profile),
                                    it->second.player, it->second.payoff,
                                    game.ProfileAt(index), i, payoff,
                                    std::nullopt}};
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return {};
}

// First (profile index, player) with pi_i(a) != pi_{sigma(i)}(a sigma), or
// num_profiles when none.
std::pair<std::size_t, int> FirstDmFailure(const Game& game,
                                           const Permutation& sigma) {
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const std::size_t moved = ActIndex(game, actions, sigma);
    for (int i = 0; i < game.players(); ++i) {
      if (game.PayoffOf(i, index) != game.PayoffOf(sigma(i), moved)) {
        return {index, i};
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return {game.num_profiles(), 0};
}

bool InvariantUnder(const Game& game, const Permutation& sigma) {
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const std::size_t moved = ActIndex(game, actions, sigma);
    for (int i = 0; i < game.players(); ++i) {
      if (game.PayoffOf(sigma(i), index) != game.PayoffOf(i, moved)) {
        return false;
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return true;
}

std::size_t Binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Number of compositions of total into parts non-negative parts.
std::size_t Compositions(int total, int parts) {
  if (parts == 0) return total == 0 ? 1 : 0;
  return Binomial(total + parts - 1, parts - 1);
}

void AppendPartitions(int total, int parts, Partition& prefix,
                      std::vector<Partition>& out) {
  if (parts == 1) {
    prefix.push_back(total);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = total; first >= 0; --first) {
    prefix.push_back(first);
    AppendPartitions(total - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

InvarianceResult IsInvariant(const Game& game, const Permutation& sigma) {
  if (sigma.size() != game.players()) {
    throw Error(ErrorCode::kSizeMismatch,
                "permutation degree differs from player count");
  }
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const std::size_t moved = ActIndex(game, actions, sigma);
    for (int i = 0; i < game.players(); ++i) {
      const Rational& lhs = game.PayoffOf(sigma(i), index);
      const Rational& rhs = game.PayoffOf(i, moved);
      if (lhs != rhs) {
        return {false, InvarianceFailure{Profile{actions}, i, lhs, rhs}};
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return {true, std::nullopt};
}

std::vector<Permutation> InvarianceGroup(const Game& game, Exec exec) {
  const int n = game.players();
  // a -> a sigma permutes each orbit, so invariance forces player i and
  // player sigma(i) to see the same payoff multiset on every orbit.
  const OrbitPartition orbits = Orbits(game);
  std::vector<std::vector<std::vector<Rational>>> multisets(
      n, std::vector<std::vector<Rational>>(orbits.classes.size()));
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < orbits.classes.size(); ++c) {
      auto& values = multisets[i][c];
      for (std::size_t index : orbits.classes[c]) {
        values.push_back(game.PayoffOf(i, index));
      }
      std::sort(values.begin(), values.end());
    }
  }
  std::vector<std::vector<bool>> compatible(n, std::vector<bool>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) compatible[i][j] = multisets[i] == multisets[j];
  }

  std::vector<Permutation> candidates;
  ForEachConstrained(n, {}, [&](const Permutation& sigma) {
    for (int i = 0; i < n; ++i) {
      if (!compatible[i][sigma(i)]) return true;
    }
    candidates.push_back(sigma);
    return true;
  });

  std::vector<char> keep(candidates.size(), 0);
  ParallelFor(candidates.size(), exec, [&](std::size_t k) {
    keep[k] = InvariantUnder(game, candidates[k]) ? 1 : 0;
  });

  std::vector<Permutation> group;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    if (keep[k]) group.push_back(std::move(candidates[k]));
  }
  return group;
}

OrbitPartition Orbits(int players, int num_actions) {
  const Game shape(players, [&] {
    std::vector<std::string> names;
    for (int k = 0; k < num_actions; ++k) names.push_back(std::to_string(k));
    return names;
  }());
  return Orbits(shape);
}

OrbitPartition Orbits(const Game& game) {
  OrbitPartition out;
  out.class_of.assign(game.num_profiles(), -1);
  std::map<std::uint64_t, int> id_of_image;
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const std::uint64_t code = ImageCode(actions, game.num_actions(), -1);
    auto [it, inserted] =
        id_of_image.try_emplace(code, static_cast<int>(out.classes.size()));
    if (inserted) out.classes.emplace_back();
    out.classes[it->second].push_back(index);
    out.class_of[index] = it->second;
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return out;
}

Classification Classify(const Game& game, Exec exec) {
  const int n = game.players();
  const int s = game.num_actions();
  std::uint64_t image_space = 1;
  for (int k = 0; k < s; ++k) image_space *= static_cast<std::uint64_t>(n + 1);

  Classification result;
  result.anonymous =
      ScanForConflict(game, [&](std::span<const int> a, int i) {
        return (static_cast<std::uint64_t>(i) * s + a[i]) * image_space +
               ImageCode(a, s, i);
      });
  result.symmetric =
      ScanForConflict(game, [&](std::span<const int> a, int i) {
        return static_cast<std::uint64_t>(a[i]) * image_space +
               ImageCode(a, s, i);
      });
  result.self_anonymous =
      ScanForConflict(game, [&](std::span<const int> a, int i) {
        return static_cast<std::uint64_t>(i) * image_space +
               ImageCode(a, s, -1);
      });
  result.self_symmetric = ScanForConflict(
      game, [&](std::span<const int> a, int) { return ImageCode(a, s, -1); });

  const std::vector<Permutation> all = AllPermutations(n);
  std::vector<std::pair<std::size_t, int>> failures(all.size());
  ParallelFor(all.size(), exec, [&](std::size_t k) {
    failures[k] = FirstDmFailure(game, all[k]);
  });
  std::size_t best = all.size();
  for (std::size_t k = 0; k < all.size(); ++k) {
    if (failures[k].first == game.num_profiles()) continue;
    if (best == all.size() || failures[k].first < failures[best].first) {
      best = k;
    }
  }
  if (best != all.size()) {
    const Permutation& sigma = all[best];
    const Profile a = game.ProfileAt(failures[best].first);
    const int i = failures[best].second;
    const Profile moved = Act(a, sigma);
    result.dm_symmetric = PredicateVerdict{
        false, PredicateFailure{a, i, game.PayoffOf(i, a), moved, sigma(i),
                                game.PayoffOf(sigma(i), moved), sigma}};
  }
  return result;
}

std::vector<Partition> EnumeratePartitions(int total, int parts) {
  if (parts < 1) {
    throw Error(ErrorCode::kInvalidQuery, "partitions need at least one part");
  }
  if (total < 0) {
    throw Error(ErrorCode::kInvalidQuery, "partition total is negative");
  }
  std::vector<Partition> out;
  Partition prefix;
  AppendPartitions(total, parts, prefix, out);
  return out;
}

std::size_t PartitionIndex(const Partition& partition, int total) {
  std::size_t rank = 0;
  int remaining = total;
  const int parts = static_cast<int>(partition.size());
  for (int k = 0; k + 1 < parts; ++k) {
    const int rest = parts - k - 1;
    // Coordinates larger than partition[k] are enumerated first.
    for (int v = remaining; v > partition[k]; --v) {
      rank += Compositions(remaining - v, rest);
    }
    remaining -= partition[k];
  }
  return rank;
}

AnonymousGame::AnonymousGame(int players, std::vector<std::string> actions)
    : players_(players),
      actions_(std::move(actions)),
      partitions_(EnumeratePartitions(players - 1,
                                      static_cast<int>(actions_.size()))),
      utilities_(players_ * actions_.size() * partitions_.size(),
                 Rational(0)) {}

std::size_t AnonymousGame::Slot(int player, int action,
                                const Partition& others) const {
  if (player < 0 || player >= players_ || action < 0 ||
      action >= num_actions()) {
    throw Error(ErrorCode::kOutOfRange, "utility index out of range");
  }
  if (others.size() != actions_.size()) {
    throw Error(ErrorCode::kSizeMismatch, "partition has wrong length");
  }
  int sum = 0;
  for (int c : others) {
    if (c < 0) throw Error(ErrorCode::kOutOfRange, "negative count");
    sum += c;
  }
  if (sum != players_ - 1) {
    throw Error(ErrorCode::kSizeMismatch, "partition does not sum to n-1");
  }
  return (static_cast<std::size_t>(player) * num_actions() + action) *
             partitions_.size() +
         PartitionIndex(others, players_ - 1);
}

const Rational& AnonymousGame::Utility(int player, int action,
                                       const Partition& others) const {
  return utilities_[Slot(player, action, others)];
}

void AnonymousGame::SetUtility(int player, int action, const Partition& others,
                               const Rational& value) {
  utilities_[Slot(player, action, others)] = value;
}

AnonymousRepresentation ToAnonymous(const Game& game) {
  AnonymousGame anonymous(game.players(), game.actions());
  const int n = game.players();
  std::vector<std::optional<std::size_t>> source(
      n * game.num_actions() * anonymous.partitions().size());

  std::vector<int> actions(n, 0);
  std::size_t index = 0;
  do {
    for (int i = 0; i < n; ++i) {
      CommutativeImage others = ImageOf(actions, game.num_actions());
      --others.counts[actions[i]];
      const Rational& payoff = game.PayoffOf(i, index);
      const std::size_t slot =
          (static_cast<std::size_t>(i) * game.num_actions() + actions[i]) *
              anonymous.partitions().size() +
          PartitionIndex(others.counts, n - 1);
      if (!source[slot]) {
        source[slot] = index;
        anonymous.SetUtility(i, actions[i], others.counts, payoff);
      } else if (anonymous.Utility(i, actions[i], others.counts) != payoff) {
        const Profile first = game.ProfileAt(*source[slot]);
        return {std::nullopt,
                AnonymityConflict{i, first, Profile{actions},
                                  game.PayoffOf(i, first), payoff}};
      }
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  return {std::move(anonymous), std::nullopt};
}

Game FromAnonymous(const AnonymousGame& anonymous) {
  Game game(anonymous.players(), anonymous.actions());
  std::vector<int> actions(game.players(), 0);
  do {
    const Profile profile{actions};
    for (int i = 0; i < game.players(); ++i) {
      CommutativeImage others = ImageOf(actions, game.num_actions());
      --others.counts[actions[i]];
      game.SetPayoff(i, profile,
                     anonymous.Utility(i, actions[i], others.counts));
    }
  } while (NextProfile(actions, game.num_actions()));
  return game;
}

}  // namespace gamesym
