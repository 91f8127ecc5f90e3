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

#include "gamesym/report.h"

#include <iomanip>
#include <optional>
#include <sstream>

namespace gamesym::report {
namespace {

std::string CellKey(int i, int j) {
  return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

Json FailureJson(const Game& game, const PredicateFailure& f) {
  Json out;
  out["first"] = {{"profile", game.FormatProfile(f.first)},
                  {"player", f.first_player + 1},
                  {"payoff", RationalJson(f.first_payoff)}};
  out["second"] = {{"profile", game.FormatProfile(f.second)},
                   {"player", f.second_player + 1},
                   {"payoff", RationalJson(f.second_payoff)}};
  if (f.sigma) out["permutation"] = ToCycleString(*f.sigma);
  return out;
}

Json RoleCounterexampleJson(const Game& game, const RoleCounterexample& c) {
  Json out;
  out["profile"] = game.FormatProfile(c.profile);
  out["permutation"] = ToCycleString(c.sigma);
  out["payoffs"] = Json::array({RationalJson(c.lhs), RationalJson(c.rhs)});
  return out;
}

std::string FailureText(const Game& game, const PredicateFailure& f) {
  std::string out = "pi_" + std::to_string(f.first_player + 1) +
                    game.FormatProfile(f.first) + " = " +
                    ToString(f.first_payoff) + " but pi_" +
                    std::to_string(f.second_player + 1) +
                    game.FormatProfile(f.second) + " = " +
                    ToString(f.second_payoff);
  if (f.sigma) out += " under " + ToCycleString(*f.sigma);
  return out;
}

std::string CounterexampleText(const Game& game, const RoleCounterexample& c) {
  return game.FormatProfile(c.profile) + " under " + ToCycleString(c.sigma) +
         ": " + ToString(c.lhs) + " vs " + ToString(c.rhs);
}

bool IsSimulation(PlayerRelation r) { return r == PlayerRelation::kM; }

bool IsQ(PlayerRelation r) {
  return r == PlayerRelation::kQB || r == PlayerRelation::kQT ||
         r == PlayerRelation::kQM;
}

std::optional<Json> WitnessJson(const Game& game, PlayerRelation relation,
                                const RelationCell& cell) {
  if (cell.witness) return Json(ToCycleString(*cell.witness));
  if (IsSimulation(relation) && !cell.witness_of_profile.empty()) {
    Json map = Json::object();
    for (std::size_t index = 0; index < game.num_profiles(); ++index) {
      const int k = cell.witness_of_profile[index];
      map[game.FormatProfile(game.ProfileAt(index))] =
          ToCycleString(cell.candidates[k]);
    }
    return map;
  }
  if (IsQ(relation) && !cell.matching.empty()) {
    Json map = Json::object();
    for (std::size_t k = 0; k < cell.matching.size(); ++k) {
      if (cell.matching[k] >= 0) {
        map[std::to_string(k + 1)] = cell.matching[k] + 1;
      }
    }
    return map;
  }
  return std::nullopt;
}

Json FailureEntry(const Game& game, const RelationCell& cell) {
  Json entry = Json::object();
  if (cell.counterexample) {
    entry = RoleCounterexampleJson(game, *cell.counterexample);
  }
  if (cell.failing_roles) {
    entry["roles"] = Json::array({ToString(cell.failing_roles->first),
                                  ToString(cell.failing_roles->second)});
  }
  if (!cell.rejected.empty()) {
    Json rejected = Json::array();
    for (const auto& r : cell.rejected) {
      rejected.push_back(RoleCounterexampleJson(game, r));
    }
    entry["rejected"] = std::move(rejected);
  }
  return entry;
}

std::string CellText(const Game& game, PlayerRelation relation, int i, int j,
                     const RelationCell& cell) {
  const int n = game.players();
  const std::string label = std::to_string(i + 1) +
                            std::string(RelationName(relation)) +
                            std::to_string(j + 1);
  std::ostringstream out;
  if (cell.holds) {
    out << label << ": holds";
    if (cell.by_convention) {
      out << " by convention";
    } else if (cell.witness) {
      out << ", witness " << ToCycleString(*cell.witness);
    } else if (IsQ(relation) && !cell.matching.empty()) {
      out << ", matching";
      for (int k = 0; k < n; ++k) {
        if (cell.matching[k] >= 0) {
          out << " " << k + 1 << "->" << cell.matching[k] + 1;
        }
      }
    }
    out << "\n";
    return out.str();
  }
  out << label << ": fails";
  if (cell.failing_roles) {
    out << " at " << ToString(cell.failing_roles->first) << " vs "
        << ToString(cell.failing_roles->second);
  }
  if (!cell.rejected.empty()) {
    out << "\n";
    for (const auto& r : cell.rejected) {
      out << "  rejected " << CounterexampleText(game, r) << "\n";
    }
    return out.str();
  }
  if (cell.counterexample) {
    out << ", " << CounterexampleText(game, *cell.counterexample);
  }
  out << "\n";
  return out.str();
}

std::string Pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::vector<RoleId> AllRoles(int n) {
  std::vector<RoleId> roles;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) roles.push_back({i, j});
  }
  return roles;
}

std::string PlayerList(const std::vector<int>& players) {
  std::string out = "(";
  for (std::size_t k = 0; k < players.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(players[k] + 1);
  }
  return out + ")";
}

std::string RoleList(const std::vector<RoleId>& roles) {
  std::string out = "(";
  for (std::size_t k = 0; k < roles.size(); ++k) {
    if (k) out += ",";
    out += ToString(roles[k]);
  }
  return out + ")";
}

Json VerdictJson(const PropertyVerdict& v, bool role_level) {
  Json out;
  out["holds"] = v.holds;
  if (!v.holds) {
    Json offenders = Json::array();
    if (role_level) {
      for (const auto& r : v.roles) offenders.push_back(ToString(r));
    } else {
      for (int p : v.players) offenders.push_back(p + 1);
    }
    out["counterexample"] = std::move(offenders);
  }
  return out;
}

std::string VerdictText(const PropertyVerdict& v, bool role_level) {
  if (v.holds) return "yes";
  return "no " + (role_level ? RoleList(v.roles) : PlayerList(v.players));
}

}  // namespace

Json RationalJson(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return ToString(r);
}

std::string Dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json ClassificationJson(const Game& game, const Classification& c) {
  const std::pair<const char*, const PredicateVerdict*> rows[] = {
      {"anonymous", &c.anonymous},
      {"symmetric", &c.symmetric},
      {"self_anonymous", &c.self_anonymous},
      {"self_symmetric", &c.self_symmetric},
      {"dm_symmetric", &c.dm_symmetric}};
  Json out;
  Json counterexamples = Json::object();
  for (const auto& [name, verdict] : rows) {
    out[name] = verdict->holds;
    if (verdict->counterexample) {
      counterexamples[name] = FailureJson(game, *verdict->counterexample);
    }
  }
  out["counterexamples"] = std::move(counterexamples);
  return out;
}

Json GroupJson(const Game& game, const std::vector<Permutation>& group) {
  Json out;
  out["order"] = group.size();
  out["full"] = group.size() == Factorial(game.players());
  Json elements = Json::array();
  for (const auto& p : group) elements.push_back(ToCycleString(p));
  out["elements"] = std::move(elements);
  return out;
}

Json OrbitsJson(const Game& game, const OrbitPartition& orbits) {
  Json out;
  out["count"] = orbits.classes.size();
  Json classes = Json::array();
  for (const auto& cls : orbits.classes) {
    Json entry;
    const Profile first = game.ProfileAt(cls.front());
    entry["image"] = ImageOf(first, game.num_actions()).counts;
    Json profiles = Json::array();
    for (auto index : cls) {
      profiles.push_back(game.FormatProfile(game.ProfileAt(index)));
    }
    entry["profiles"] = std::move(profiles);
    classes.push_back(std::move(entry));
  }
  out["classes"] = std::move(classes);
  return out;
}

Json RelationJson(const Game& game, const RelationMatrix& m) {
  const int n = m.players;
  Json out;
  out["relation"] = RelationName(m.relation);
  Json grid = Json::array();
  for (int i = 0; i < n; ++i) {
    Json row = Json::array();
    for (int j = 0; j < n; ++j) row.push_back(m.Holds(i, j));
    grid.push_back(std::move(row));
  }
  out["grid"] = std::move(grid);

  Json witnesses = Json::object();
  Json counterexamples = Json::object();
  Json conventions = Json::array();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RelationCell& cell = m.At(i, j);
      const std::string key = CellKey(i, j);
      if (cell.by_convention) conventions.push_back(key);
      if (cell.holds) {
        if (auto w = WitnessJson(game, m.relation, cell)) {
          witnesses[key] = std::move(*w);
        }
      } else {
        counterexamples[key] = FailureEntry(game, cell);
      }
    }
  }
  out["witnesses"] = std::move(witnesses);
  out["counterexamples"] = std::move(counterexamples);
  if (!conventions.empty()) out["by_convention"] = std::move(conventions);
  return out;
}

Json CellJson(const Game& game, PlayerRelation relation, int i, int j,
              const RelationCell& cell) {
  Json out;
  out["relation"] = RelationName(relation);
  out["pair"] = Json::array({i + 1, j + 1});
  out["holds"] = cell.holds;
  if (cell.by_convention) out["by_convention"] = true;
  if (cell.holds) {
    if (auto w = WitnessJson(game, relation, cell)) out["witness"] = *w;
  } else {
    out["counterexample"] = FailureEntry(game, cell);
  }
  return out;
}

std::string CellTable(const Game& game, PlayerRelation relation, int i, int j,
                      const RelationCell& cell) {
  return CellText(game, relation, i, j, cell);
}

Json RoleResultJson(const Game& game, RoleRelation relation, RoleId lhs,
                    RoleId rhs, const RoleRelationResult& r) {
  Json out;
  out["relation"] = RoleRelationName(relation);
  out["lhs"] = ToString(lhs);
  out["rhs"] = ToString(rhs);
  out["holds"] = r.holds;
  if (r.witness) out["witness"] = ToCycleString(*r.witness);
  if (r.holds && relation == RoleRelation::kSimulates) {
    Json map = Json::object();
    for (std::size_t index = 0; index < game.num_profiles(); ++index) {
      map[game.FormatProfile(game.ProfileAt(index))] =
          ToCycleString(r.candidates[r.witness_of_profile[index]]);
    }
    out["witnesses"] = std::move(map);
  }
  if (r.counterexample) {
    out["counterexample"] = RoleCounterexampleJson(game, *r.counterexample);
  }
  if (!r.rejected.empty()) {
    Json rejected = Json::array();
    for (const auto& c : r.rejected) {
      rejected.push_back(RoleCounterexampleJson(game, c));
    }
    out["rejected"] = std::move(rejected);
  }
  return out;
}

std::string RoleResultTable(const Game& game, RoleRelation relation,
                            RoleId lhs, RoleId rhs,
                            const RoleRelationResult& r) {
  std::ostringstream out;
  out << ToString(lhs) << " " << RoleRelationName(relation) << " "
      << ToString(rhs) << ": " << (r.holds ? "holds" : "fails");
  if (r.witness) out << ", witness " << ToCycleString(*r.witness);
  out << "\n";
  if (r.holds && relation == RoleRelation::kSimulates) {
    for (std::size_t index = 0; index < game.num_profiles(); ++index) {
      out << "  " << game.FormatProfile(game.ProfileAt(index)) << " -> "
          << ToCycleString(r.candidates[r.witness_of_profile[index]]) << "\n";
    }
  }
  if (!r.rejected.empty()) {
    for (const auto& c : r.rejected) {
      out << "  rejected " << CounterexampleText(game, c) << "\n";
    }
  } else if (r.counterexample) {
    out << "  counterexample " << CounterexampleText(game, *r.counterexample)
        << "\n";
  }
  return out.str();
}

Json RoleTableJson(const RoleRelationTable& table) {
  const auto roles = AllRoles(table.players());
  Json out;
  out["relation"] = RoleRelationName(table.relation());
  Json names = Json::array();
  for (const auto& r : roles) names.push_back(ToString(r));
  out["roles"] = std::move(names);
  Json grid = Json::array();
  for (const auto& lhs : roles) {
    Json row = Json::array();
    for (const auto& rhs : roles) {
      const auto v = table.At(lhs, rhs);
      row.push_back(v ? Json(*v) : Json(nullptr));
    }
    grid.push_back(std::move(row));
  }
  out["grid"] = std::move(grid);
  return out;
}

Json TwistedClassesJson(const std::vector<std::vector<RoleId>>& classes) {
  Json out = Json::array();
  for (const auto& cls : classes) {
    Json members = Json::array();
    for (const auto& r : cls) members.push_back(ToString(r));
    out.push_back(std::move(members));
  }
  return out;
}

Json PropertiesJson(const PropertyReport& report) {
  Json out = Json::object();
  for (const auto& rel : report.relations) {
    Json entry;
    entry["reflexive"] = VerdictJson(rel.reflexive, rel.role_level);
    entry["symmetric"] = VerdictJson(rel.symmetric, rel.role_level);
    entry["transitive"] = VerdictJson(rel.transitive, rel.role_level);
    out[rel.name] = std::move(entry);
  }
  return out;
}

Json DiagnosticsJson(const Diagnostics& diagnostics) {
  Json out = Json::array();
  for (const auto& check : diagnostics.checks) {
    Json entry;
    entry["check"] = check.name;
    entry["holds"] = check.holds;
    if (check.disputed) entry["disputed"] = true;
    if (!check.detail.empty()) entry["detail"] = check.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

Json AnonymousJson(const Game& game, const AnonymousRepresentation& rep) {
  Json out;
  out["ok"] = rep.ok();
  if (rep.game) {
    const AnonymousGame& u = *rep.game;
    Json utilities = Json::array();
    for (int i = 0; i < u.players(); ++i) {
      for (int a = 0; a < u.num_actions(); ++a) {
        Json entry;
        entry["player"] = i + 1;
        entry["action"] = u.actions()[a];
        Json values = Json::object();
        for (const auto& x : u.partitions()) {
          std::string key;
          for (std::size_t k = 0; k < x.size(); ++k) {
            key += (k ? "," : "") + std::to_string(x[k]);
          }
          values[key] = RationalJson(u.Utility(i, a, x));
        }
        entry["utility"] = std::move(values);
        utilities.push_back(std::move(entry));
      }
    }
    out["utilities"] = std::move(utilities);
  }
  if (rep.conflict) {
    const auto& c = *rep.conflict;
    out["conflict"] = {{"player", c.player + 1},
                       {"first", game.FormatProfile(c.first)},
                       {"second", game.FormatProfile(c.second)},
                       {"payoffs", Json::array({RationalJson(c.first_payoff),
                                                RationalJson(c.second_payoff)})}};
  }
  return out;
}

Json VerifyJson(const std::vector<FixtureCheck>& checks) {
  Json out;
  bool all = true;
  Json entries = Json::array();
  for (const auto& c : checks) {
    all = all && c.passed;
    Json entry;
    entry["fixture"] = c.fixture;
    entry["check"] = c.name;
    entry["passed"] = c.passed;
    entry["provenance"] = c.provenance;
    if (!c.detail.empty()) entry["detail"] = c.detail;
    entries.push_back(std::move(entry));
  }
  out["passed"] = all;
  out["checks"] = std::move(entries);
  return out;
}

std::string ClassificationTable(const Game& game, const Classification& c) {
  const std::pair<const char*, const PredicateVerdict*> rows[] = {
      {"anonymous", &c.anonymous},
      {"symmetric", &c.symmetric},
      {"self_anonymous", &c.self_anonymous},
      {"self_symmetric", &c.self_symmetric},
      {"dm_symmetric", &c.dm_symmetric}};
  std::ostringstream out;
  for (const auto& [name, verdict] : rows) {
    out << Pad(name, 16) << (verdict->holds ? "yes" : "no");
    if (verdict->counterexample) {
      out << "  " << FailureText(game, *verdict->counterexample);
    }
    out << "\n";
  }
  return out.str();
}

std::string GroupTable(const std::vector<Permutation>& group, int players) {
  std::ostringstream out;
  out << "order " << group.size() << " of " << Factorial(players) << "\n";
  for (const auto& p : group) out << "  " << ToCycleString(p) << "\n";
  return out.str();
}

std::string OrbitsTable(const Game& game, const OrbitPartition& orbits) {
  std::ostringstream out;
  out << orbits.classes.size() << " orbits\n";
  for (const auto& cls : orbits.classes) {
    const auto image = ImageOf(game.ProfileAt(cls.front()), game.num_actions());
    out << "  #=(";
    for (std::size_t k = 0; k < image.counts.size(); ++k) {
      out << (k ? "," : "") << image.counts[k];
    }
    out << ")  {";
    for (std::size_t k = 0; k < cls.size(); ++k) {
      out << (k ? ", " : "") << game.FormatProfile(game.ProfileAt(cls[k]));
    }
    out << "}\n";
  }
  return out.str();
}

std::string RelationTable(const Game& game, const RelationMatrix& m) {
  const int n = m.players;
  const std::string name(RelationName(m.relation));
  std::ostringstream out;
  out << Pad(name, 4);
  for (int j = 0; j < n; ++j) out << std::setw(3) << j + 1;
  out << "\n";
  for (int i = 0; i < n; ++i) {
    out << Pad(std::to_string(i + 1), 4);
    for (int j = 0; j < n; ++j) out << std::setw(3) << (m.Holds(i, j) ? "x" : ".");
    out << "\n";
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const RelationCell& cell = m.At(i, j);
      if (cell.holds && !cell.by_convention && !cell.witness &&
          (!IsQ(m.relation) || cell.matching.empty())) {
        continue;
      }
      out << CellText(game, m.relation, i, j, cell);
    }
  }
  return out.str();
}

std::string RoleTable(const RoleRelationTable& table) {
  const auto roles = AllRoles(table.players());
  std::ostringstream out;
  out << Pad(std::string(RoleRelationName(table.relation())), 8);
  for (const auto& r : roles) out << Pad(ToString(r), 7);
  out << "\n";
  for (const auto& lhs : roles) {
    out << Pad(ToString(lhs), 8);
    for (const auto& rhs : roles) {
      const auto v = table.At(lhs, rhs);
      out << Pad(v ? (*v ? "x" : ".") : " ", 7);
    }
    out << "\n";
  }
  return out.str();
}

std::string TwistedClassesTable(
    const std::vector<std::vector<RoleId>>& classes) {
  std::ostringstream out;
  out << classes.size() << " twisted classes\n";
  for (const auto& cls : classes) out << "  " << RoleList(cls) << "\n";
  return out.str();
}

std::string PropertiesTable(const PropertyReport& report) {
  std::ostringstream out;
  out << Pad("", 6) << Pad("reflexive", 28) << Pad("symmetric", 28)
      << "transitive\n";
  for (const auto& rel : report.relations) {
    out << Pad(rel.name, 6)
        << Pad(VerdictText(rel.reflexive, rel.role_level), 28)
        << Pad(VerdictText(rel.symmetric, rel.role_level), 28)
        << VerdictText(rel.transitive, rel.role_level) << "\n";
  }
  return out.str();
}

std::string DiagnosticsTable(const Diagnostics& diagnostics) {
  std::ostringstream out;
  for (const auto& check : diagnostics.checks) {
    out << (check.holds ? "ok    " : "FAIL  ") << check.name;
    if (check.disputed) out << " [disputed]";
    if (!check.holds && !check.detail.empty()) out << "  " << check.detail;
    out << "\n";
  }
  return out.str();
}

std::string AnonymousTable(const Game& game,
                           const AnonymousRepresentation& rep) {
  std::ostringstream out;
  if (rep.conflict) {
    const auto& c = *rep.conflict;
    out << "no anonymous representation: pi_" << c.player + 1
        << game.FormatProfile(c.first) << " = " << ToString(c.first_payoff)
        << " but pi_" << c.player + 1 << game.FormatProfile(c.second) << " = "
        << ToString(c.second_payoff) << "\n";
    return out.str();
  }
  const AnonymousGame& u = *rep.game;
  for (int i = 0; i < u.players(); ++i) {
    for (int a = 0; a < u.num_actions(); ++a) {
      out << "u^" << i + 1 << "_" << u.actions()[a] << ":";
      for (const auto& x : u.partitions()) {
        out << " (";
        for (std::size_t k = 0; k < x.size(); ++k) out << (k ? "," : "") << x[k];
        out << ")=" << ToString(u.Utility(i, a, x));
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string VerifyTable(const std::vector<FixtureCheck>& checks) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& c : checks) {
    passed += c.passed;
    out << (c.passed ? "PASS  " : "FAIL  ") << Pad(c.fixture, 10) << c.name;
    if (c.provenance != "asserted") out << " [" << c.provenance << "]";
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
  out << passed << "/" << checks.size() << " checks passed\n";
  return out.str();
}

}  // namespace gamesym::report
