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

#include "cli.h"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "gamesym/error.h"
#include "gamesym/fixtures.h"
#include "gamesym/game.h"
#include "gamesym/game_io.h"
#include "gamesym/oracle.h"
#include "gamesym/relations.h"
#include "gamesym/report.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"

namespace gamesym::cli {
namespace {

using report::Json;

struct Options {
  std::string file;
  std::string fixture;
  std::string star = "0";
  std::string format = "table";
  std::string relation;
  std::string pair;
  std::string emit;
  bool strict = false;
  bool representation = false;
  std::uint64_t seed = 1;
  int players = 3;
  int actions = 2;
  std::string mode = "general";
  std::int64_t min_payoff = -9;
  std::int64_t max_payoff = 9;
  std::string fixture_name;
};

bool IsJson(const Options& o) { return o.format == "json"; }

Game LoadInput(const Options& o) {
  const bool has_file = !o.file.empty();
  const bool has_fixture = !o.fixture.empty();
  if (has_file == has_fixture) {
    throw Error(ErrorCode::kInvalidQuery,
                "give exactly one input: a game file or --fixture <name>");
  }
  if (has_fixture) return Fixture(o.fixture, ParseRational(o.star));
  return LoadGame(o.file);
}

std::vector<int> ParsePair(const std::string& text, std::size_t arity,
                           int players) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    const std::string token = text.substr(start, comma - start);
    int value = 0;
    const auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse, "bad player index '" + token +
                                         "' in --pair '" + text + "'");
    }
    if (value < 1 || value > players) {
      throw Error(ErrorCode::kOutOfRange,
                  "player '" + token + "' in --pair is outside 1.." +
                      std::to_string(players));
    }
    out.push_back(value - 1);
    start = comma + 1;
  }
  if (out.size() != arity) {
    throw Error(ErrorCode::kInvalidQuery,
                "--pair '" + text + "' needs " + std::to_string(arity) +
                    " comma-separated players");
  }
  return out;
}

RoleRelation ParseRoleRelation(const std::string& name) {
  if (name == "B_r" || name == "B") return RoleRelation::kBlind;
  if (name == "T_r" || name == "T" || name.empty()) {
    return RoleRelation::kTwisted;
  }
  if (name == "M_r" || name == "M") return RoleRelation::kSimulates;
  throw Error(ErrorCode::kUnknownName,
              "unknown role relation '" + name +
                  "' (expected B_r, T_r or M_r)");
}

void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParse, "cannot write '" + path + "'");
  file << text;
}

int Classify(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  const Classification c = gamesym::Classify(g);
  std::optional<AnonymousRepresentation> rep;
  if (o.representation) rep = ToAnonymous(g);
  if (IsJson(o)) {
    Json doc = report::ClassificationJson(g, c);
    if (rep) doc["representation"] = report::AnonymousJson(g, *rep);
    out << report::Dump(doc);
  } else {
    out << report::ClassificationTable(g, c);
    if (rep) out << report::AnonymousTable(g, *rep);
  }
  return rep && !rep->ok() && o.strict ? kExitConflict : kExitOk;
}

int Group(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  const auto group = InvarianceGroup(g);
  out << (IsJson(o) ? report::Dump(report::GroupJson(g, group))
                   : report::GroupTable(group, g.players()));
  return kExitOk;
}

int OrbitsCommand(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  const auto orbits = Orbits(g);
  out << (IsJson(o) ? report::Dump(report::OrbitsJson(g, orbits))
                   : report::OrbitsTable(g, orbits));
  return kExitOk;
}

int Relations(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  if (!o.pair.empty()) {
    if (o.relation.empty()) {
      throw Error(ErrorCode::kInvalidQuery, "--pair needs --relation");
    }
    const PlayerRelation r = ParseRelation(o.relation);
    const auto p = ParsePair(o.pair, 2, g.players());
    const RelationCell cell = EvaluateCell(g, r, p[0], p[1]);
    out << (IsJson(o) ? report::Dump(report::CellJson(g, r, p[0], p[1], cell))
                     : report::CellTable(g, r, p[0], p[1], cell));
    return !cell.holds && o.strict ? kExitConflict : kExitOk;
  }
  std::vector<PlayerRelation> wanted;
  if (o.relation.empty()) {
    wanted.assign(std::begin(kAllPlayerRelations),
                  std::end(kAllPlayerRelations));
  } else {
    wanted.push_back(ParseRelation(o.relation));
  }
  if (IsJson(o) && wanted.size() == 1) {
    out << report::Dump(
        report::RelationJson(g, ComputeRelationMatrix(g, wanted[0])));
    return kExitOk;
  }
  Json all = Json::object();
  bool first = true;
  for (PlayerRelation r : wanted) {
    const RelationMatrix m = ComputeRelationMatrix(g, r);
    if (IsJson(o)) {
      all[std::string(RelationName(r))] = report::RelationJson(g, m);
    } else {
      if (!first) out << "\n";
      out << report::RelationTable(g, m);
    }
    first = false;
  }
  if (IsJson(o)) out << report::Dump(all);
  return kExitOk;
}

int Roles(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  const RoleRelation r = ParseRoleRelation(o.relation);
  if (!o.pair.empty()) {
    const auto p = ParsePair(o.pair, 4, g.players());
    const RoleId lhs{p[0], p[1]};
    const RoleId rhs{p[2], p[3]};
    if (lhs.diagonal() != rhs.diagonal()) {
      throw Error(ErrorCode::kInvalidQuery,
                  "--pair compares " + ToString(lhs) + " with " +
                      ToString(rhs) + ", which differ in arity");
    }
    const RoleRelationResult result = Relate(g, r, lhs, rhs);
    out << (IsJson(o) ? report::Dump(
                           report::RoleResultJson(g, r, lhs, rhs, result))
                     : report::RoleResultTable(g, r, lhs, rhs, result));
    return !result.holds && o.strict ? kExitConflict : kExitOk;
  }
  const RoleRelationTable table(g, r);
  std::optional<std::vector<std::vector<RoleId>>> classes;
  if (r == RoleRelation::kTwisted) classes = TwistedClasses(g);
  if (IsJson(o)) {
    Json doc = report::RoleTableJson(table);
    if (classes) doc["classes"] = report::TwistedClassesJson(*classes);
    out << report::Dump(doc);
  } else {
    out << report::RoleTable(table);
    if (classes) out << report::TwistedClassesTable(*classes);
  }
  return kExitOk;
}

int Report(const Options& o, std::ostream& out) {
  const Game g = LoadInput(o);
  const Classification c = gamesym::Classify(g);
  const auto group = InvarianceGroup(g);
  const auto orbits = Orbits(g);
  const PropertyReport props = ComputePropertyReport(g);
  const Diagnostics diag = RunDiagnostics(g);
  std::vector<RelationMatrix> matrices;
  for (PlayerRelation r : kAllPlayerRelations) {
    matrices.push_back(ComputeRelationMatrix(g, r));
  }
  if (IsJson(o)) {
    Json doc;
    doc["players"] = g.players();
    doc["actions"] = g.actions();
    doc["classification"] = report::ClassificationJson(g, c);
    doc["group"] = report::GroupJson(g, group);
    doc["orbits"] = report::OrbitsJson(g, orbits);
    Json rel = Json::object();
    for (const auto& m : matrices) {
      rel[std::string(RelationName(m.relation))] = report::RelationJson(g, m);
    }
    doc["relations"] = std::move(rel);
    doc["properties"] = report::PropertiesJson(props);
    doc["diagnostics"] = report::DiagnosticsJson(diag);
    out << report::Dump(doc);
  } else {
    out << "== classification\n" << report::ClassificationTable(g, c);
    out << "\n== invariance group\n" << report::GroupTable(group, g.players());
    out << "\n== orbits\n" << report::OrbitsTable(g, orbits);
    for (const auto& m : matrices) {
      out << "\n== relation " << RelationName(m.relation) << "\n"
          << report::RelationTable(g, m);
    }
    out << "\n== properties\n" << report::PropertiesTable(props);
    out << "\n== diagnostics\n" << report::DiagnosticsTable(diag);
  }
  return !diag.AllHold(false) && o.strict ? kExitConflict : kExitOk;
}

int FixtureCommand(const Options& o, std::ostream& out) {
  const Rational star = ParseRational(o.star);
  const Game g = Fixture(o.fixture_name, star);
  std::vector<std::string> header = {FixtureSummary(o.fixture_name)};
  if (HasStars(o.fixture_name)) {
    header.push_back("free entries set to " + ToString(star));
  }
  const std::string text = SerializeGame(g, header);
  if (o.emit.empty()) {
    out << text;
  } else {
    WriteFile(o.emit, text);
  }
  return kExitOk;
}

int Generate(const Options& o, std::ostream& out) {
  oracle::GeneratorConfig config;
  config.players = o.players;
  config.actions = o.actions;
  config.seed = o.seed;
  config.min_payoff = o.min_payoff;
  config.max_payoff = o.max_payoff;
  config.mode = oracle::ParseMode(o.mode);
  const Game g = oracle::Generate(config);
  const std::string text = SerializeGame(g, oracle::GeneratorHeader(config));
  if (o.emit.empty()) {
    out << text;
  } else {
    WriteFile(o.emit, text);
  }
  return kExitOk;
}

int Verify(const Options& o, std::ostream& out) {
  const auto checks = VerifyFixtures();
  out << (IsJson(o) ? report::Dump(report::VerifyJson(checks))
                   : report::VerifyTable(checks));
  const bool all = std::all_of(checks.begin(), checks.end(),
                               [](const FixtureCheck& c) { return c.passed; });
  return all ? kExitOk : kExitConflict;
}

void AddInput(CLI::App* cmd, Options& o) {
  cmd->add_option("file", o.file, "Game file (JSON)");
  cmd->add_option("--fixture", o.fixture, "Built-in example game");
  cmd->add_option("--star", o.star,
                  "Value for the free entries of a fixture (default 0)");
}

void AddFormat(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Player-symmetry analysis for finite normal-form games",
               "gamesym"};
  app.require_subcommand(1);

  auto* classify = app.add_subcommand("classify", "Classification predicates");
  AddInput(classify, o);
  AddFormat(classify, o);
  classify->add_flag("--representation", o.representation,
                     "Also build the anonymous representation");
  classify->add_flag("--strict", o.strict,
                     "Exit 1 when the representation does not exist");

  auto* group = app.add_subcommand("group", "Invariance group");
  AddInput(group, o);
  AddFormat(group, o);

  auto* orbits = app.add_subcommand("orbits", "Profile orbits");
  AddInput(orbits, o);
  AddFormat(orbits, o);

  auto* relations = app.add_subcommand("relations", "Player relations");
  AddInput(relations, o);
  AddFormat(relations, o);
  relations->add_option("--relation", o.relation,
                        "B, R, T, M, PB, PT, PM, QB, QT or QM");
  relations->add_option("--pair", o.pair, "One cell, as i,j");
  relations->add_flag("--strict", o.strict, "Exit 1 when the cell fails");

  auto* roles = app.add_subcommand("roles", "Role relations");
  AddInput(roles, o);
  AddFormat(roles, o);
  roles->add_option("--relation", o.relation, "B_r, T_r (default) or M_r");
  roles->add_option("--pair", o.pair, "Compare r_i^j with r_k^l, as i,j,k,l");
  roles->add_flag("--strict", o.strict, "Exit 1 when the comparison fails");

  auto* full = app.add_subcommand("report", "Every analysis at once");
  AddInput(full, o);
  AddFormat(full, o);
  full->add_flag("--strict", o.strict, "Exit 1 when a diagnostic fails");

  auto* fixture = app.add_subcommand("fixture", "Print or save an example game");
  fixture->add_option("name", o.fixture_name, "Fixture name")->required();
  fixture->add_option("--emit", o.emit, "Write to this path");
  fixture->add_option("--star", o.star, "Value for the free entries");

  auto* generate = app.add_subcommand("generate", "Seeded random game");
  generate->add_option("--players,-n", o.players, "Players (2..7)");
  generate->add_option("--actions,-s", o.actions, "Actions (2..4)");
  generate->add_option("--seed", o.seed, "PRNG seed");
  generate->add_option("--mode", o.mode,
                       "general, anonymous or self_symmetric");
  generate->add_option("--min", o.min_payoff, "Smallest payoff");
  generate->add_option("--max", o.max_payoff, "Largest payoff");
  generate->add_option("--emit", o.emit, "Write to this path");

  auto* verify = app.add_subcommand("verify", "Check every fixture verdict");
  AddFormat(verify, o);

  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      app.get_subcommand_no_throw(args.front()) == nullptr) {
    err << "gamesym: unknown subcommand '" << args.front() << "'\n";
    return kExitInput;
  }
  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "gamesym: " << e.what() << "\n";
    return kExitInput;
  }

  try {
    if (classify->parsed()) return Classify(o, out);
    if (group->parsed()) return Group(o, out);
    if (orbits->parsed()) return OrbitsCommand(o, out);
    if (relations->parsed()) return Relations(o, out);
    if (roles->parsed()) return Roles(o, out);
    if (full->parsed()) return Report(o, out);
    if (fixture->parsed()) return FixtureCommand(o, out);
    if (generate->parsed()) return Generate(o, out);
    if (verify->parsed()) return Verify(o, out);
  } catch (const Error& e) {
    err << "gamesym: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace gamesym::cli
