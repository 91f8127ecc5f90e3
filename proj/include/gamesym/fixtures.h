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

#ifndef GAMESYM_FIXTURES_H_
#define GAMESYM_FIXTURES_H_

#include <string>
#include <string_view>
#include <vector>

#include "gamesym/game.h"
#include "gamesym/parallel.h"
#include "gamesym/rational.h"

namespace gamesym {

// overdet3, notrans3, tnotrans4, exsym4, g4, gprime4, gsecond4, gthird4.
const std::vector<std::string>& FixtureNames();

// The named example game. Unlisted profiles are zero. Entries left free in
// g4, gprime4, gsecond4 and gthird4 (the payoffs of players 3 and 4 on the
// listed profiles) take `star_fill`; other fixtures ignore it.
// Throws Error(kUnknownName).
Game Fixture(std::string_view name, const Rational& star_fill = 0);

// Whether the fixture has free entries.
bool HasStars(std::string_view name);

// One line describing the fixture, used as the header of emitted files.
std::string FixtureSummary(std::string_view name);

// One verdict of the fixture catalogue. `provenance` is "asserted" for
// values fixed in advance and "computed" for verdicts that are only
// reported (gthird4).
struct FixtureCheck {
  std::string fixture;
  std::string name;
  bool passed;
  std::string detail;
  std::string provenance;
};

std::vector<FixtureCheck> VerifyFixtures(Exec exec = Exec::kParallel);

}  // namespace gamesym

#endif  // GAMESYM_FIXTURES_H_
