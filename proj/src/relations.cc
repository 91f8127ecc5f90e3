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

#include "gamesym/relations.h"

#include <algorithm>

#include "gamesym/error.h"
#include "gamesym/symmetry.h"

namespace gamesym {
namespace {

void CheckPlayers(const Game& game, int i, int j) {
  if (i < 0 || j < 0 || i >= game.players() || j >= game.players()) {
    throw Error(ErrorCode::kOutOfRange,
                "player index out of range 1.." +
                    std::to_string(game.players()));
  }
}

RelationCell FromRoleResult(RoleRelationResult r) {
  RelationCell cell;
  cell.holds = r.holds;
  cell.witness = std::move(r.witness);
  cell.candidates = std::move(r.candidates);
  cell.witness_of_profile = std::move(r.witness_of_profile);
  cell.counterexample = std::move(r.counterexample);
  cell.rejected = std::move(r.rejected);
  return cell;
}

// verdicts[k][l] = r_i^k X_r r_j^l for the (k, l) pairs of matching arity.
std::vector<std::vector<signed char>> RoleVerdicts(const Game& game, int i,
                                                   int j, RoleRelation x) {
  const int n = game.players();
  std::vector<std::vector<signed char>> verdicts(n,
                                                 std::vector<signed char>(n));
  for (int k = 0; k < n; ++k) {
    for (int l = 0; l < n; ++l) {
      if ((k == i) != (l == j)) {
        verdicts[k][l] = -1;
        continue;
      }
      verdicts[k][l] = RelationHolds(game, x, {i, k}, {j, l}) ? 1 : 0;
    }
  }
  return verdicts;
}

void AttachFailure(const Game& game, RelationCell& cell, RoleRelation x,
                   RoleId lhs, RoleId rhs) {
  cell.failing_roles = std::make_pair(lhs, rhs);
  cell.counterexample = Relate(game, x, lhs, rhs).counterexample;
}

}  // namespace

std::string_view RelationName(PlayerRelation relation) {
  switch (relation) {
    case PlayerRelation::kB: return "B";
    case PlayerRelation::kR: return "R";
    case PlayerRelation::kT: return "T";
    case PlayerRelation::kM: return "M";
    case PlayerRelation::kPB: return "PB";
    case PlayerRelation::kPT: return "PT";
    case PlayerRelation::kPM: return "PM";
    case PlayerRelation::kQB: return "QB";
    case PlayerRelation::kQT: return "QT";
    case PlayerRelation::kQM: return "QM";
  }
  return "?";
}

PlayerRelation ParseRelation(std::string_view name) {
  for (PlayerRelation r : kAllPlayerRelations) {
    if (RelationName(r) == name) return r;
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown relation '" + std::string(name) +
                  "' (expected B, R, T, M, PB, PT, PM, QB, QT or QM)");
}

RelationCell Blind(const Game& game, int i, int j) {
  CheckPlayers(game, i, j);
  return FromRoleResult(BlindRelated(game, {i, j}, {j, i}));
}

RelationCell Rigid(const Game& game, int i, int j) {
  CheckPlayers(game, i, j);
  RelationCell cell;
  if (i == j) {
    cell.holds = true;
    cell.by_convention = true;
    return cell;
  }
  const Permutation swap = Permutation::Transposition(game.players(), i, j);
  std::vector<int> actions(game.players(), 0);
  std::size_t index = 0;
  do {
    const std::size_t moved = ActIndex(game, actions, swap);
    if (game.PayoffOf(i, index) != game.PayoffOf(j, moved)) {
      cell.counterexample = RoleCounterexample{
          Profile{actions}, swap, game.PayoffOf(i, index),
          game.PayoffOf(j, moved)};
      return cell;
    }
    ++index;
  } while (NextProfile(actions, game.num_actions()));
  cell.holds = true;
  return cell;
}

RelationCell Twisted(const Game& game, int i, int j) {
  CheckPlayers(game, i, j);
  return FromRoleResult(TwistedRelated(game, {i, j}, {j, i}));
}

RelationCell SimulatesPlayer(const Game& game, int i, int j) {
  CheckPlayers(game, i, j);
  return FromRoleResult(Simulates(game, {i, j}, {j, i}));
}

RelationCell PRelation(const Game& game, int i, int j, RoleRelation x) {
  CheckPlayers(game, i, j);
  const int n = game.players();
  const auto verdicts = RoleVerdicts(game, i, j, x);
  RelationCell cell;
  std::optional<Permutation> first_tau;
  const Pin pin{i, j};
  ForEachConstrained(n, {&pin, 1}, [&](const Permutation& tau) {
    if (!first_tau) first_tau = tau;
    for (int k = 0; k < n; ++k) {
      if (verdicts[k][tau(k)] != 1) return true;
    }
    cell.holds = true;
    cell.witness = tau;
    return false;
  });
  if (!cell.holds) {
    for (int k = 0; k < n; ++k) {
      if (verdicts[k][(*first_tau)(k)] != 1) {
        AttachFailure(game, cell, x, {i, k}, {j, (*first_tau)(k)});
        break;
      }
    }
  }
  return cell;
}

RelationCell QRelation(const Game& game, int i, int j, RoleRelation x) {
  CheckPlayers(game, i, j);
  const int n = game.players();
  const auto verdicts = RoleVerdicts(game, i, j, x);
  RelationCell cell;
  if (verdicts[i][j] != 1) {
    AttachFailure(game, cell, x, {i, i}, {j, j});
    return cell;
  }
  cell.matching.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    if (k == i) continue;
    for (int l = 0; l < n; ++l) {
      if (l != j && verdicts[k][l] == 1) {
        cell.matching[k] = l;
        break;
      }
    }
    if (cell.matching[k] < 0) {
      AttachFailure(game, cell, x, {i, k}, {j, j == 0 ? 1 : 0});
      cell.matching.clear();
      return cell;
    }
  }
  cell.holds = true;
  return cell;
}

RelationCell EvaluateCell(const Game& game, PlayerRelation relation, int i,
                          int j) {
  switch (relation) {
    case PlayerRelation::kB: return Blind(game, i, j);
    case PlayerRelation::kR: return Rigid(game, i, j);
    case PlayerRelation::kT: return Twisted(game, i, j);
    case PlayerRelation::kM: return SimulatesPlayer(game, i, j);
    case PlayerRelation::kPB: return PRelation(game, i, j, RoleRelation::kBlind);
    case PlayerRelation::kPT:
      return PRelation(game, i, j, RoleRelation::kTwisted);
    case PlayerRelation::kPM:
      return PRelation(game, i, j, RoleRelation::kSimulates);
    case PlayerRelation::kQB: return QRelation(game, i, j, RoleRelation::kBlind);
    case PlayerRelation::kQT:
      return QRelation(game, i, j, RoleRelation::kTwisted);
    case PlayerRelation::kQM:
      return QRelation(game, i, j, RoleRelation::kSimulates);
  }
  throw Error(ErrorCode::kUnknownName, "unknown relation");
}

bool CellHolds(const Game& game, PlayerRelation relation, int i, int j) {
  CheckPlayers(game, i, j);
  switch (relation) {
    case PlayerRelation::kB:
      return RelationHolds(game, RoleRelation::kBlind, {i, j}, {j, i});
    case PlayerRelation::kT:
      return RelationHolds(game, RoleRelation::kTwisted, {i, j}, {j, i});
    case PlayerRelation::kM:
      return RelationHolds(game, RoleRelation::kSimulates, {i, j}, {j, i});
    default:
      return EvaluateCell(game, relation, i, j).holds;
  }
}

RelationMatrix ComputeRelationMatrix(const Game& game, PlayerRelation relation,
                                     Exec exec) {
  const int n = game.players();
  RelationMatrix matrix{relation, n,
                        std::vector<RelationCell>(static_cast<std::size_t>(n) *
                                                  n)};
  ParallelFor(matrix.cells.size(), exec, [&](std::size_t slot) {
    matrix.cells[slot] = EvaluateCell(game, relation, static_cast<int>(slot) / n,
                                      static_cast<int>(slot) % n);
  });
  return matrix;
}

namespace {

// Property scan over an abstract relation on elements 0..size-1.
// `defined(a, b)` restricts to comparable pairs; `distinct` skips pairs and
// triples with repeated elements.
template <class Rel, class Defined>
void ScanProperties(int size, bool distinct, Rel rel, Defined defined,
                    PropertyVerdict& reflexive, PropertyVerdict& symmetric,
                    std::vector<int>& transitive_triple) {
  for (int a = 0; a < size && reflexive.holds; ++a) {
    if (!rel(a, a)) {
      reflexive.holds = false;
      reflexive.players = {a};
    }
  }
  for (int a = 0; a < size && symmetric.holds; ++a) {
    for (int b = 0; b < size; ++b) {
      if ((distinct && a == b) || !defined(a, b)) continue;
      if (rel(a, b) && !rel(b, a)) {
        symmetric.holds = false;
        symmetric.players = {a, b};
        break;
      }
    }
  }
  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      if ((distinct && a == b) || !defined(a, b) || !rel(a, b)) continue;
      for (int c = 0; c < size; ++c) {
        if (distinct && (c == a || c == b)) continue;
        if (!defined(b, c) || !rel(b, c)) continue;
        if (!rel(a, c)) {
          transitive_triple = {a, b, c};
          return;
        }
      }
    }
  }
}

}  // namespace

PropertyReport ComputePropertyReport(const Game& game, Exec exec) {
  const int n = game.players();
  PropertyReport report{n, {}};

  for (RoleRelation x : {RoleRelation::kBlind, RoleRelation::kTwisted,
                         RoleRelation::kSimulates}) {
    const RoleRelationTable table(game, x, exec);
    auto role = [n](int slot) { return RoleId{slot / n, slot % n}; };
    auto defined = [&](int a, int b) {
      return table.At(role(a), role(b)).has_value();
    };
    auto rel = [&](int a, int b) {
      return table.At(role(a), role(b)).value_or(false);
    };
    RelationProperties props{std::string(RoleRelationName(x)), true, {}, {},
                             {}};
    std::vector<int> triple;
    ScanProperties(n * n, false, rel, defined, props.reflexive,
                   props.symmetric, triple);
    for (PropertyVerdict* v : {&props.reflexive, &props.symmetric}) {
      for (int slot : v->players) v->roles.push_back(role(slot));
      v->players.clear();
    }
    if (!triple.empty()) {
      props.transitive.holds = false;
      for (int slot : triple) props.transitive.roles.push_back(role(slot));
    }
    report.relations.push_back(std::move(props));
  }

  for (PlayerRelation x : {PlayerRelation::kB, PlayerRelation::kR,
                           PlayerRelation::kT, PlayerRelation::kM}) {
    std::vector<char> grid(static_cast<std::size_t>(n) * n);
    ParallelFor(grid.size(), exec, [&](std::size_t slot) {
      grid[slot] = CellHolds(game, x, static_cast<int>(slot) / n,
                             static_cast<int>(slot) % n);
    });
    auto rel = [&](int a, int b) { return grid[a * n + b] != 0; };
    RelationProperties props{std::string(RelationName(x)), false, {}, {}, {}};
    std::vector<int> triple;
    ScanProperties(n, true, rel, [](int, int) { return true; },
                   props.reflexive, props.symmetric, triple);
    if (!triple.empty()) {
      props.transitive.holds = false;
      props.transitive.players = triple;
    }
    report.relations.push_back(std::move(props));
  }
  return report;
}

bool Diagnostics::AllHold(bool include_disputed) const {
  return std::all_of(checks.begin(), checks.end(), [&](const auto& c) {
    return c.holds || (c.disputed && !include_disputed);
  });
}

const DiagnosticCheck& Diagnostics::Find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::kUnknownName,
              "no diagnostic named '" + std::string(name) + "'");
}

Diagnostics RunDiagnostics(const Game& game, Exec exec) {
  const int n = game.players();
  Diagnostics out;
  auto add = [&](std::string name, bool holds, std::string detail = {},
                 bool disputed = false) {
    out.checks.push_back({std::move(name), holds, std::move(detail), disputed});
  };
  auto cell_label = [](int i, int j) {
    return "cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
  };

  const Classification c = Classify(game, exec);
  std::vector<RelationMatrix> m;
  for (PlayerRelation r : kAllPlayerRelations) {
    m.push_back(ComputeRelationMatrix(game, r, exec));
  }
  auto grid = [&](PlayerRelation r) -> const RelationMatrix& {
    return m[static_cast<int>(r)];
  };

  bool all_diag_b = true;
  bool all_b = true;
  bool all_r = true;
  for (int i = 0; i < n; ++i) {
    all_diag_b = all_diag_b && grid(PlayerRelation::kB).Holds(i, i);
    for (int j = 0; j < n; ++j) {
      all_b = all_b && grid(PlayerRelation::kB).Holds(i, j);
      all_r = all_r && grid(PlayerRelation::kR).Holds(i, j);
    }
  }

  add("symmetric => anonymous",
      !c.symmetric.holds || c.anonymous.holds);
  add("self-symmetric => self-anonymous",
      !c.self_symmetric.holds || c.self_anonymous.holds);
  add("self-symmetric => symmetric",
      !c.self_symmetric.holds || c.symmetric.holds);
  // Disputed for two players.
  add("dm-symmetric <=> self-symmetric",
      c.dm_symmetric.holds == c.self_symmetric.holds, {}, n == 2);
  {
    bool equal = true;
    if (c.dm_symmetric.holds && n >= 3) {
      for (std::size_t index = 0; index < game.num_profiles() && equal;
           ++index) {
        const auto v = game.Payoffs(index);
        equal = std::all_of(v.begin(), v.end(),
                            [&](const Rational& r) { return r == v[0]; });
      }
    }
    add("dm-symmetric and n >= 3 => equal payoffs per profile", equal);
  }
  add("anonymous <=> every i B i", c.anonymous.holds == all_diag_b);
  add("anonymous <=> anonymous representation exists",
      c.anonymous.holds == ToAnonymous(game).ok());
  add("symmetric <=> every i B j", c.symmetric.holds == all_b);
  add("symmetric <=> invariance group is S_n",
      c.symmetric.holds == (InvarianceGroup(game, exec).size() == Factorial(n)));
  add("every i R j => symmetric", !all_r || c.symmetric.holds);

  struct Inclusion {
    PlayerRelation sub;
    PlayerRelation super;
    bool disputed;
  };
  const Inclusion inclusions[] = {
      {PlayerRelation::kB, PlayerRelation::kR, false},
      {PlayerRelation::kR, PlayerRelation::kT, false},
      {PlayerRelation::kT, PlayerRelation::kM, false},
      {PlayerRelation::kPB, PlayerRelation::kPT, false},
      {PlayerRelation::kPT, PlayerRelation::kPM, false},
      {PlayerRelation::kQB, PlayerRelation::kQT, false},
      {PlayerRelation::kQT, PlayerRelation::kQM, false},
      {PlayerRelation::kPB, PlayerRelation::kQB, false},
      {PlayerRelation::kPT, PlayerRelation::kQT, false},
      {PlayerRelation::kPM, PlayerRelation::kQM, false},
      // Disputed: the role-wise P^B includes r_i^i B_r r_j^j.
      {PlayerRelation::kT, PlayerRelation::kPB, true},
  };
  for (const auto& inc : inclusions) {
    std::string detail;
    for (int i = 0; i < n && detail.empty(); ++i) {
      for (int j = 0; j < n; ++j) {
        if (grid(inc.sub).Holds(i, j) && !grid(inc.super).Holds(i, j)) {
          detail = cell_label(i, j);
          break;
        }
      }
    }
    add(std::string(RelationName(inc.sub)) + " subset of " +
            std::string(RelationName(inc.super)),
        detail.empty(), detail, inc.disputed);
  }
  return out;
}

}  // namespace gamesym
