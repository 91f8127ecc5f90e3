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

#ifndef GAMESYM_REPORT_H_
#define GAMESYM_REPORT_H_

#include <string>
#include <vector>

#include <json.hpp>

#include "gamesym/fixtures.h"
#include "gamesym/game.h"
#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"

// JSON documents and plain-text tables for analysis results. Key order is
// fixed and every collection is emitted in a fixed order, so output is
// byte-for-byte reproducible. Players are 1-based throughout.
namespace gamesym::report {

using Json = nlohmann::ordered_json;

// Integer, or "p/q".
Json RationalJson(const Rational& r);

// {"anonymous": bool, ..., "dm_symmetric": bool, "counterexamples": {...}}
Json ClassificationJson(const Game& game, const Classification& c);
// {"order": k, "full": bool, "elements": ["()", ...]}
Json GroupJson(const Game& game, const std::vector<Permutation>& group);
// {"count": k, "classes": [{"image": [...], "profiles": [...]}]}
Json OrbitsJson(const Game& game, const OrbitPartition& orbits);
// {"relation", "grid", "witnesses", "counterexamples"}; cells are keyed
// "i,j". Witnesses are a cycle string (T, P), a profile -> permutation map
// (M) or a k -> l map (Q).
Json RelationJson(const Game& game, const RelationMatrix& matrix);
// A single cell: {"relation", "pair", "holds", "witness"|"counterexample"}.
Json CellJson(const Game& game, PlayerRelation relation, int i, int j,
              const RelationCell& cell);
// One role comparison with its witness or counterexample.
Json RoleResultJson(const Game& game, RoleRelation relation, RoleId lhs,
                    RoleId rhs, const RoleRelationResult& result);
// {"relation", "roles": ["r_1^1", ...], "grid": [[bool|null]]} plus the
// twisted classes.
Json RoleTableJson(const RoleRelationTable& table);
Json TwistedClassesJson(const std::vector<std::vector<RoleId>>& classes);
Json PropertiesJson(const PropertyReport& report);
Json DiagnosticsJson(const Diagnostics& diagnostics);
Json AnonymousJson(const Game& game, const AnonymousRepresentation& rep);
Json VerifyJson(const std::vector<FixtureCheck>& checks);

// dump(2) followed by a newline.
std::string Dump(const Json& doc);

std::string ClassificationTable(const Game& game, const Classification& c);
std::string GroupTable(const std::vector<Permutation>& group, int players);
std::string OrbitsTable(const Game& game, const OrbitPartition& orbits);
std::string RelationTable(const Game& game, const RelationMatrix& matrix);
std::string CellTable(const Game& game, PlayerRelation relation, int i, int j,
                      const RelationCell& cell);
std::string RoleResultTable(const Game& game, RoleRelation relation,
                            RoleId lhs, RoleId rhs,
                            const RoleRelationResult& result);
std::string RoleTable(const RoleRelationTable& table);
std::string TwistedClassesTable(
    const std::vector<std::vector<RoleId>>& classes);
std::string PropertiesTable(const PropertyReport& report);
std::string DiagnosticsTable(const Diagnostics& diagnostics);
std::string AnonymousTable(const Game& game,
                           const AnonymousRepresentation& rep);
std::string VerifyTable(const std::vector<FixtureCheck>& checks);

}  // namespace gamesym::report

#endif  // GAMESYM_REPORT_H_
