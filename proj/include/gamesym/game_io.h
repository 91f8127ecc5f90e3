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

#ifndef GAMESYM_GAME_IO_H_
#define GAMESYM_GAME_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "gamesym/game.h"

namespace gamesym {

// Reads the JSON game format:
//
//   {
//     "players": 3,
//     "actions": ["a", "b", "c"],
//     "default": [0, 0, 0],                  // optional
//     "payoffs": { "a,b,c": [0, 1, "5/2"] }
//   }
//
// Payoff entries are integers, "p/q" strings or finite decimal strings.
// Profiles absent from "payoffs" take "default"; without a default every
// profile must be listed. // and /* */ comments are ignored.
// Throws Error(kParse) or Error(kUnknownName) naming the offending token.
Game ParseGame(std::string_view text);

// Canonical text: profiles with a non-zero payoff vector are listed in index
// order, every other profile is covered by an all-zero "default". Each
// header line is written as a leading // comment.
std::string SerializeGame(const Game& game,
                          const std::vector<std::string>& header = {});

Game LoadGame(const std::string& path);
void SaveGame(const Game& game, const std::string& path,
              const std::vector<std::string>& header = {});

}  // namespace gamesym

#endif  // GAMESYM_GAME_IO_H_
