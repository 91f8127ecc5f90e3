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

#include "gamesym/fixtures.h"

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <optional>

#include "gamesym/error.h"
#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"

namespace gamesym {
namespace {

using Row = std::initializer_list<std::int64_t>;

void Put(Game& game, std::string_view profile, Row values) {
  const Profile a = game.ParseProfile(profile);
  int player = 0;
  for (std::int64_t v : values) game.SetPayoff(player++, a, Rational(v));
}

// Four-player two-action rows "(x, y, *, *)".
void PutStarred(Game& game, std::string_view profile, std::int64_t first,
                std::int64_t second, const Rational& star) {
  const Profile a = game.ParseProfile(profile);
  game.SetPayoff(0, a, Rational(first));
  game.SetPayoff(1, a, Rational(second));
  game.SetPayoff(2, a, star);
  game.SetPayoff(3, a, star);
}

Game Overdet3() {
  Game g(3, {"a", "b"});
  Put(g, "a,a,a", {10, 10, 10});
  Put(g, "a,b,a", {5, 5, 5});
  Put(g, "b,a,a", {5, 5, 5});
  Put(g, "b,b,a", {-5, -5, -5});
  Put(g, "a,a,b", {5, 5, 5});
  Put(g, "a,b,b", {-5, -5, -5});
  Put(g, "b,a,b", {-5, -5, -5});
  Put(g, "b,b,b", {0, 0, 0});
  return g;
}

Game Notrans3() {
  Game g(3, {"a", "b", "c"});
  Put(g, "a,b,c", {0, 1, 2});
  Put(g, "a,c,b", {3, 2, 1});
  Put(g, "b,a,c", {1, 0, 4});
  Put(g, "b,c,a", {5, 4, 0});
  Put(g, "c,a,b", {2, 3, 5});
  Put(g, "c,b,a", {4, 5, 3});
  return g;
}

Game Tnotrans4() {
  Game g(4, {"a", "b", "c", "d"});
  Put(g, "a,b,c,d", {1, 2, 3, 0});
  Put(g, "a,c,b,d", {4, 3, 2, 0});
  Put(g, "c,a,b,d", {3, 4, 5, 0});
  Put(g, "c,b,a,d", {6, 5, 4, 0});
  Put(g, "b,c,a,d", {5, 6, 1, 0});
  Put(g, "b,a,c,d", {2, 1, 6, 0});
  return g;
}

Game Exsym4() {
  Game g(4, {"a", "b", "c", "d"});
  g.SetPayoff(1, g.ParseProfile("a,b,c,d"), Rational(1));
  return g;
}

Game G4(const Rational& star) {
  Game g(4, {"a", "b"});
  PutStarred(g, "a,a,a,b", 1, 2, star);
  PutStarred(g, "a,a,b,a", 2, 1, star);
  PutStarred(g, "a,b,a,b", 3, 4, star);
  PutStarred(g, "b,a,a,b", 4, 3, star);
  return g;
}

Game Gprime4(const Rational& star) {
  Game g(4, {"a", "b"});
  PutStarred(g, "a,b,a,b", 1, 2, star);
  PutStarred(g, "a,b,b,a", 3, 4, star);
  PutStarred(g, "b,a,a,b", 4, 3, star);
  PutStarred(g, "b,a,b,a", 2, 1, star);
  return g;
}

Game Gsecond4(const Rational& star) {
  Game g(4, {"a", "b"});
  PutStarred(g, "a,b,a,b", 1, 2, star);
  PutStarred(g, "a,b,b,a", 3, 4, star);
  PutStarred(g, "b,a,a,b", 2, 1, star);
  PutStarred(g, "b,a,b,a", 4, 3, star);
  return g;
}

Game Gthird4(const Rational& star) {
  Game g(4, {"a", "b"});
  PutStarred(g, "a,b,a,b", 1, 2, star);
  PutStarred(g, "a,b,b,a", 1, 2, star);
  PutStarred(g, "b,a,a,b", 2, 1, star);
  PutStarred(g, "b,a,b,a", 2, 1, star);
  return g;
}

}  // namespace

const std::vector<std::string>& FixtureNames() {
  static const std::vector<std::string> names = {
      "overdet3", "notrans3", "tnotrans4", "exsym4",
      "g4",       "gprime4",  "gsecond4",  "gthird4"};
  return names;
}

Game Fixture(std::string_view name, const Rational& star_fill) {
  if (name == "overdet3") return Overdet3();
  if (name == "notrans3") return Notrans3();
  if (name == "tnotrans4") return Tnotrans4();
  if (name == "exsym4") return Exsym4();
  if (name == "g4") return G4(star_fill);
  if (name == "gprime4") return Gprime4(star_fill);
  if (name == "gsecond4") return Gsecond4(star_fill);
  if (name == "gthird4") return Gthird4(star_fill);
  throw Error(ErrorCode::kUnknownName,
              "unknown fixture '" + std::string(name) + "'");
}

bool HasStars(std::string_view name) {
  return name == "g4" || name == "gprime4" || name == "gsecond4" ||
         name == "gthird4";
}

std::string FixtureSummary(std::string_view name) {
  if (name == "overdet3") {
    return "overdet3: 3 players, actions a,b; orbit-constant payoffs shared "
           "by all players";
  }
  if (name == "notrans3") {
    return "notrans3: 3 players, actions a,b,c; 1B2 and 2B3 hold, 1B3 and "
           "1B1 fail";
  }
  if (name == "tnotrans4") {
    return "tnotrans4: 4 players, actions a,b,c,d; 1T2 and 2T3 hold, 1T3 "
           "fails";
  }
  if (name == "exsym4") {
    return "exsym4: 4 players, actions a,b,c,d; only pi_2(a,b,c,d) = 1 is "
           "non-zero";
  }
  if (name == "g4") return "g4: 4 players, actions a,b; 1M2 holds, 1T2 fails";
  if (name == "gprime4") {
    return "gprime4: 4 players, actions a,b; 1T2 holds, 1R2 fails";
  }
  if (name == "gsecond4") {
    return "gsecond4: 4 players, actions a,b; 1R2 holds, 1B2 fails";
  }
  if (name == "gthird4") {
    return "gthird4: 4 players, actions a,b; free entries and unlisted "
           "profiles set to zero, 1B2 computed";
  }
  throw Error(ErrorCode::kUnknownName,
              "unknown fixture '" + std::string(name) + "'");
}

namespace {

class Checklist {
 public:
  explicit Checklist(std::vector<FixtureCheck>& out) : out_(out) {}

  void Add(const std::string& fixture, const std::string& name, bool passed,
           std::string detail = {}, std::string provenance = "asserted") {
    out_.push_back({fixture, name, passed, std::move(detail),
                    std::move(provenance)});
  }

 private:
  std::vector<FixtureCheck>& out_;
};

std::string Label(int i, std::string_view relation, int j) {
  return std::to_string(i + 1) + std::string(relation) + std::to_string(j + 1);
}

std::string Verdict(bool b) { return b ? "true" : "false"; }

// "1B2 = true" style check.
void ExpectCell(Checklist& list, const std::string& fixture, const Game& g,
                PlayerRelation relation, int i, int j, bool expected) {
  const bool got = CellHolds(g, relation, i, j);
  const std::string label = Label(i, RelationName(relation), j);
  list.Add(fixture, label + " is " + Verdict(expected), got == expected,
           "computed " + Verdict(got));
}

std::string PayoffString(std::span<const Rational> values) {
  std::string out = "(";
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ",";
    out += ToString(values[k]);
  }
  return out + ")";
}

void ExpectPayoffs(Checklist& list, const std::string& fixture, const Game& g,
                   std::string_view profile, Row expected) {
  const auto got = g.Payoffs(g.ParseProfile(profile));
  std::vector<Rational> want;
  for (auto v : expected) want.emplace_back(v);
  const bool ok = std::equal(got.begin(), got.end(), want.begin(), want.end());
  list.Add(fixture,
           "pi(" + std::string(profile) + ") = " + PayoffString(want), ok,
           "computed " + PayoffString(got));
}

std::string ProfileOrNone(const Game& g,
                          const std::optional<RoleCounterexample>& c) {
  return c ? g.FormatProfile(c->profile) : "none";
}

void VerifyOverdet3(Checklist& list, Exec exec) {
  const std::string f = "overdet3";
  const Game g = Fixture(f);
  ExpectPayoffs(list, f, g, "a,a,a", {10, 10, 10});
  ExpectPayoffs(list, f, g, "b,a,a", {5, 5, 5});
  ExpectPayoffs(list, f, g, "b,b,b", {0, 0, 0});

  const auto group = InvarianceGroup(g, exec);
  list.Add(f, "invariant under all of S_3", group.size() == 6,
           "group order " + std::to_string(group.size()));

  const auto orbits = Orbits(g);
  std::vector<std::vector<std::string>> got;
  for (const auto& cls : orbits.classes) {
    std::vector<std::string> names;
    for (auto index : cls) names.push_back(g.FormatProfile(g.ProfileAt(index)));
    std::sort(names.begin(), names.end());
    got.push_back(names);
  }
  std::sort(got.begin(), got.end());
  std::vector<std::vector<std::string>> want = {
      {"(a,a,a)"},
      {"(a,a,b)", "(a,b,a)", "(b,a,a)"},
      {"(a,b,b)", "(b,a,b)", "(b,b,a)"},
      {"(b,b,b)"}};
  std::sort(want.begin(), want.end());
  list.Add(f, "four orbits by occupancy", got == want,
           std::to_string(orbits.classes.size()) + " classes");

  const Classification c = Classify(g, exec);
  const bool all = c.anonymous.holds && c.symmetric.holds &&
                   c.self_anonymous.holds && c.self_symmetric.holds &&
                   c.dm_symmetric.holds;
  list.Add(f, "all five classifications hold", all);

  for (PlayerRelation r : {PlayerRelation::kB, PlayerRelation::kR,
                           PlayerRelation::kPB, PlayerRelation::kQM}) {
    const RelationMatrix m = ComputeRelationMatrix(g, r, exec);
    bool every = true;
    for (const auto& cell : m.cells) every = every && cell.holds;
    list.Add(f, "every i " + std::string(RelationName(r)) + " j", every);
  }
}

void VerifyNotrans3(Checklist& list, Exec) {
  const std::string f = "notrans3";
  const Game g = Fixture(f);
  ExpectPayoffs(list, f, g, "a,b,c", {0, 1, 2});
  ExpectPayoffs(list, f, g, "c,a,b", {2, 3, 5});
  ExpectCell(list, f, g, PlayerRelation::kB, 0, 1, true);
  ExpectCell(list, f, g, PlayerRelation::kB, 1, 2, true);
  ExpectCell(list, f, g, PlayerRelation::kB, 0, 2, false);
  ExpectCell(list, f, g, PlayerRelation::kB, 0, 0, false);
  ExpectCell(list, f, g, PlayerRelation::kR, 0, 1, true);
  ExpectCell(list, f, g, PlayerRelation::kR, 1, 2, true);
  ExpectCell(list, f, g, PlayerRelation::kR, 0, 2, false);

  const auto inv = IsInvariant(g, ParseCycleString(3, "(1 3)"));
  list.Add(f, "not invariant under (1 3), first failure at (a,b,c)",
           !inv.invariant && inv.counterexample &&
               g.FormatProfile(inv.counterexample->profile) == "(a,b,c)",
           inv.counterexample ? g.FormatProfile(inv.counterexample->profile)
                              : "invariant");

  const auto rep = ToAnonymous(g);
  bool conflict_ok = false;
  std::string detail = "representation exists";
  if (rep.conflict) {
    const auto& k = *rep.conflict;
    detail = "player " + std::to_string(k.player + 1) + " " +
             g.FormatProfile(k.first) + "=" + ToString(k.first_payoff) +
             " vs " + g.FormatProfile(k.second) + "=" +
             ToString(k.second_payoff);
    conflict_ok = k.player == 0 && g.FormatProfile(k.first) == "(a,b,c)" &&
                  g.FormatProfile(k.second) == "(a,c,b)" &&
                  k.first_payoff == Rational(0) &&
                  k.second_payoff == Rational(3);
  }
  list.Add(f, "not anonymous: pi_1(a,b,c)=0 vs pi_1(a,c,b)=3", conflict_ok,
           detail);

  const PropertyReport props = ComputePropertyReport(g);
  for (const auto& rel : props.relations) {
    if (rel.name == "B") {
      list.Add(f, "B is not reflexive", !rel.reflexive.holds);
      list.Add(f, "B is not transitive", !rel.transitive.holds);
    }
    if (rel.name == "R") {
      list.Add(f, "R is not transitive", !rel.transitive.holds);
    }
  }
}

void VerifyTnotrans4(Checklist& list, Exec) {
  const std::string f = "tnotrans4";
  const Game g = Fixture(f);
  const RelationCell t12 = Twisted(g, 0, 1);
  list.Add(f, "1T2 is true with witness (1 2)",
           t12.holds && t12.witness && ToCycleString(*t12.witness) == "(1 2)",
           t12.witness ? ToCycleString(*t12.witness) : "no witness");
  ExpectCell(list, f, g, PlayerRelation::kT, 1, 2, true);
  const RelationCell t13 = Twisted(g, 0, 2);
  std::string rejected;
  bool shape = t13.rejected.size() == 2;
  const char* want_sigma[] = {"(1 3)", "(1 3)(2 4)"};
  const std::int64_t want_rhs[] = {4, 0};
  for (std::size_t k = 0; k < t13.rejected.size(); ++k) {
    const auto& r = t13.rejected[k];
    if (k) rejected += "; ";
    rejected += ToCycleString(r.sigma) + " at " + g.FormatProfile(r.profile) +
                " " + ToString(r.lhs) + " vs " + ToString(r.rhs);
    if (k < 2) {
      shape = shape && ToCycleString(r.sigma) == want_sigma[k] &&
              g.FormatProfile(r.profile) == "(a,b,c,d)" && r.lhs == Rational(1) &&
              r.rhs == Rational(want_rhs[k]);
    }
  }
  list.Add(f, "1T3 is false; (1 3) and (1 3)(2 4) both fail at (a,b,c,d)",
           !t13.holds && shape, rejected);
}

void VerifyExsym4(Checklist& list, Exec exec) {
  const std::string f = "exsym4";
  const Game g = Fixture(f);
  const Profile abcd = g.ParseProfile("a,b,c,d");
  list.Add(f, "pi_2(a,b,c,d) = 1", g.PayoffOf(1, abcd) == Rational(1));

  int zeros = 0;
  int expected_zeros = 0;
  for (const char* p : {"a,b,c,d", "b,a,c,d", "b,a,d,c", "a,b,d,c"}) {
    const Profile a = g.ParseProfile(p);
    for (int i = 0; i < 4; ++i) {
      if (a == abcd && i == 1) continue;
      ++expected_zeros;
      if (g.PayoffOf(i, a) == Rational(0)) ++zeros;
    }
  }
  list.Add(f, "zero payoffs on the four profiles named in the example",
           zeros == expected_zeros,
           std::to_string(zeros) + " of " + std::to_string(expected_zeros));
  int nonzero = 0;
  for (std::size_t index = 0; index < g.num_profiles(); ++index) {
    for (int i = 0; i < 4; ++i) nonzero += g.PayoffOf(i, index) != Rational(0);
  }
  list.Add(f, "exactly one non-zero payoff in the table", nonzero == 1,
           std::to_string(nonzero) + " non-zero");

  const std::vector<Pin> pins = {{0, 1}, {1, 0}};
  std::vector<std::string> pinned;
  for (const auto& p : EnumerateConstrained(4, pins)) {
    pinned.push_back(ToCycleString(p));
  }
  list.Add(f, "sigma(1)=2, sigma(2)=1 gives (1 2) and (1 2)(3 4)",
           pinned == std::vector<std::string>{"(1 2)", "(1 2)(3 4)"});

  const Role r21 = ExtractRole(g, 1, 0);
  const ReducedProfile cd{{2, 3}, {0, 1}};
  list.Add(f, "r_2^1 at (c,d) with (a_2,a_1) = (b,a) is 1",
           r21.At(cd, 1, 0) == Rational(1));

  const auto fwd = Simulates(g, {0, 1}, {1, 0});
  auto witness_at = [&](std::string_view p) -> std::string {
    const int k = fwd.witness_of_profile[g.IndexOf(g.ParseProfile(p))];
    return k < 0 ? "none" : ToCycleString(fwd.candidates[k]);
  };
  const std::string w1 = witness_at("b,a,c,d");
  const std::string w2 = witness_at("b,a,d,c");
  list.Add(f,
           "r_1^2 M_r r_2^1 with (b,a,c,d) -> (1 2)(3 4), (b,a,d,c) -> (1 2)",
           fwd.holds && w1 == "(1 2)(3 4)" && w2 == "(1 2)", w1 + ", " + w2);
  const auto back = Simulates(g, {1, 0}, {0, 1});
  list.Add(f, "r_2^1 M_r r_1^2 fails at (a,b,c,d)",
           !back.holds && ProfileOrNone(g, back.counterexample) == "(a,b,c,d)",
           ProfileOrNone(g, back.counterexample));
  ExpectCell(list, f, g, PlayerRelation::kM, 0, 1, true);
  ExpectCell(list, f, g, PlayerRelation::kM, 1, 0, false);

  list.Add(f, "not symmetric", !Classify(g, exec).symmetric.holds);
  const auto group = InvarianceGroup(g, exec);
  list.Add(f, "invariance group smaller than S_4", group.size() < 24,
           "group order " + std::to_string(group.size()));
  bool m_symmetric = true;
  for (const auto& rel : ComputePropertyReport(g, exec).relations) {
    if (rel.name == "M") m_symmetric = rel.symmetric.holds;
  }
  list.Add(f, "M is not symmetric", !m_symmetric);
}

void VerifyG4(Checklist& list, Exec) {
  const std::string f = "g4";
  const Game g = Fixture(f);
  const Profile abab = g.ParseProfile("a,b,a,b");
  list.Add(f, "pi_1(a,b,a,b)=3, pi_2(a,b,a,b)=4, pi_3=pi_4=0",
           g.PayoffOf(0, abab) == Rational(3) &&
               g.PayoffOf(1, abab) == Rational(4) &&
               g.PayoffOf(2, abab) == Rational(0) &&
               g.PayoffOf(3, abab) == Rational(0));
  const RelationCell m = SimulatesPlayer(g, 0, 1);
  auto witness_at = [&](std::string_view p) -> std::string {
    const int k = m.witness_of_profile[g.IndexOf(g.ParseProfile(p))];
    return k < 0 ? "none" : ToCycleString(m.candidates[k]);
  };
  const std::string w1 = witness_at("a,b,a,b");
  const std::string w2 = witness_at("a,a,a,b");
  list.Add(f, "1M2 with (a,b,a,b) -> (1 2), (a,a,a,b) -> (1 2)(3 4)",
           m.holds && w1 == "(1 2)" && w2 == "(1 2)(3 4)", w1 + ", " + w2);
  ExpectCell(list, f, g, PlayerRelation::kT, 0, 1, false);
}

void VerifyGprime4(Checklist& list, Exec) {
  const std::string f = "gprime4";
  const Game g = Fixture(f);
  const RelationCell t = Twisted(g, 0, 1);
  list.Add(f, "1T2 is true with witness (1 2)(3 4)",
           t.holds && t.witness && ToCycleString(*t.witness) == "(1 2)(3 4)",
           t.witness ? ToCycleString(*t.witness) : "no witness");
  ExpectCell(list, f, g, PlayerRelation::kR, 0, 1, false);
}

void VerifyGsecond4(Checklist& list, Exec) {
  const std::string f = "gsecond4";
  const Game g = Fixture(f);
  ExpectCell(list, f, g, PlayerRelation::kR, 0, 1, true);
  ExpectCell(list, f, g, PlayerRelation::kB, 0, 1, false);
}

void VerifyGthird4(Checklist& list, Exec) {
  const std::string f = "gthird4";
  const Game g = Fixture(f);
  const RelationCell b = Blind(g, 0, 1);
  std::string detail = "1B2 = " + Verdict(b.holds);
  if (b.counterexample) {
    const auto& c = *b.counterexample;
    detail += "; pi_1" + g.FormatProfile(c.profile) + "=" + ToString(c.lhs) +
              " vs pi_2 under " + ToCycleString(c.sigma) + " = " +
              ToString(c.rhs);
  }
  list.Add(f, "1B2 verdict", true, detail, "computed");
}

}  // namespace

std::vector<FixtureCheck> VerifyFixtures(Exec exec) {
  std::vector<FixtureCheck> out;
  Checklist list(out);
  for (const auto& name : FixtureNames()) {
    const Game g = Fixture(name);
    const Diagnostics d = RunDiagnostics(g, exec);
    std::string failed;
    for (const auto& check : d.checks) {
      if (!check.holds && !check.disputed) {
        failed += (failed.empty() ? "" : "; ") + check.name;
      }
    }
    list.Add(name, "diagnostics", failed.empty(),
             failed.empty() ? "all identities hold" : failed);
  }
  VerifyOverdet3(list, exec);
  VerifyNotrans3(list, exec);
  VerifyTnotrans4(list, exec);
  VerifyExsym4(list, exec);
  VerifyG4(list, exec);
  VerifyGprime4(list, exec);
  VerifyGsecond4(list, exec);
  VerifyGthird4(list, exec);
  return out;
}

}  // namespace gamesym
