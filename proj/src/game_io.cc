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

#include "gamesym/game_io.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "gamesym/error.h"

namespace gamesym {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& why) {
  throw Error(ErrorCode::kParse, why);
}

Rational ToRational(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    return Rational(value.get<std::int64_t>());
  }
  if (value.is_string()) {
    return ParseRational(value.get<std::string>());
  }
  if (value.is_number_float()) {
    Fail(where + ": floating-point payload " + value.dump() +
         " is not exact; write it as a string, e.g. \"0.5\" or \"1/2\"");
  }
  Fail(where + ": expected an integer or a rational string, got " +
       value.dump());
}

std::vector<Rational> ToVector(const json& value, int players,
                               const std::string& where) {
  if (!value.is_array()) Fail(where + ": expected an array");
  if (value.size() != static_cast<std::size_t>(players)) {
    Fail(where + ": payoff vector has " + std::to_string(value.size()) +
         " entries, expected " + std::to_string(players));
  }
  std::vector<Rational> out;
  out.reserve(players);
  for (const auto& entry : value) out.push_back(ToRational(entry, where));
  return out;
}

nlohmann::ordered_json FromRational(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return ToString(r);
}

}  // namespace

Game ParseGame(std::string_view text) {
  std::string top_key;
  std::set<std::string> payoff_keys;
  std::string duplicate;
  json::parser_callback_t watch = [&](int depth, json::parse_event_t event,
                                      json& parsed) {
    if (event == json::parse_event_t::key) {
      const std::string key = parsed.get<std::string>();
      if (depth == 1) {
        top_key = key;
      } else if (depth == 2 && top_key == "payoffs" && duplicate.empty() &&
                 !payoff_keys.insert(key).second) {
        duplicate = key;
      }
    }
    return true;
  };

  json doc;
  try {
    doc = json::parse(text.begin(), text.end(), watch,
                      /*allow_exceptions=*/true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    Fail(std::string("invalid JSON: ") + e.what());
  }
  if (!duplicate.empty()) Fail("duplicate profile key '" + duplicate + "'");
  if (!doc.is_object()) Fail("game file must be a JSON object");

  for (const auto& [key, _] : doc.items()) {
    if (key != "players" && key != "actions" && key != "default" &&
        key != "payoffs") {
      Fail("unknown field '" + key + "'");
    }
  }
  if (!doc.contains("players") || !doc["players"].is_number_integer()) {
    Fail("'players' must be an integer");
  }
  if (!doc.contains("actions") || !doc["actions"].is_array()) {
    Fail("'actions' must be an array of strings");
  }
  if (!doc.contains("payoffs") || !doc["payoffs"].is_object()) {
    Fail("'payoffs' must be an object");
  }
  const int players = doc["players"].get<int>();
  std::vector<std::string> actions;
  for (const auto& a : doc["actions"]) {
    if (!a.is_string()) Fail("action names must be strings");
    actions.push_back(a.get<std::string>());
  }

  Game game = [&] {
    try {
      return Game(players, actions);
    } catch (const Error& e) {
      Fail(e.what());
    }
  }();

  std::optional<std::vector<Rational>> fallback;
  if (doc.contains("default")) {
    fallback = ToVector(doc["default"], players, "default");
  }

  std::vector<bool> listed(game.num_profiles(), false);
  for (const auto& [key, value] : doc["payoffs"].items()) {
    const Profile profile = [&] {
      try {
        return game.ParseProfile(key);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kUnknownName) throw;
        Fail("bad profile key '" + key + "': " + e.what());
      }
    }();
    const auto index = game.IndexOf(profile);
    if (listed[index]) Fail("duplicate profile key '" + key + "'");
    listed[index] = true;
    game.SetPayoffs(profile, ToVector(value, players, "profile '" + key + "'"));
  }

  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    if (listed[index]) continue;
    const Profile profile = game.ProfileAt(index);
    if (!fallback) {
      Fail("profile '" + game.ProfileKey(profile) +
           "' is missing and no default is declared");
    }
    game.SetPayoffs(profile, *fallback);
  }
  return game;
}

std::string SerializeGame(const Game& game,
                          const std::vector<std::string>& header) {
  nlohmann::ordered_json doc;
  doc["players"] = game.players();
  doc["actions"] = game.actions();

  bool any_zero = false;
  nlohmann::ordered_json payoffs = nlohmann::ordered_json::object();
  for (std::size_t index = 0; index < game.num_profiles(); ++index) {
    const auto values = game.Payoffs(index);
    const bool zero = std::all_of(values.begin(), values.end(),
                                  [](const Rational& r) { return r == Rational(0); });
    if (zero) {
      any_zero = true;
      continue;
    }
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (const auto& v : values) row.push_back(FromRational(v));
    payoffs[game.ProfileKey(game.ProfileAt(index))] = std::move(row);
  }
  if (any_zero) doc["default"] = std::vector<int>(game.players(), 0);
  doc["payoffs"] = std::move(payoffs);

  std::string out;
  for (const auto& line : header) out += "// " + line + "\n";
  out += doc.dump(2);
  out += '\n';
  return out;
}

Game LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

void SaveGame(const Game& game, const std::string& path,
              const std::vector<std::string>& header) {
  std::ofstream out(path, std::ios::binary);
  if (!out) Fail("cannot write '" + path + "'");
  out << SerializeGame(game, header);
}

}  // namespace gamesym
