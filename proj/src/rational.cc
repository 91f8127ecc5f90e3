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

#include "gamesym/rational.h"

#include <cctype>
#include <limits>

#include "gamesym/error.h"

namespace gamesym {
namespace {

[[noreturn]] void Fail(std::string_view text, std::string_view why) {
  throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) +
                                     "': " + std::string(why));
}

// Parses an unsigned decimal digit run, rejecting overflow of int64.
std::int64_t ParseDigits(std::string_view all, std::string_view digits) {
  if (digits.empty()) Fail(all, "expected digits");
  std::int64_t value = 0;
  constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      Fail(all, "unexpected character");
    }
    const int d = c - '0';
    if (value > (kMax - d) / 10) Fail(all, "out of 64-bit range");
    value = value * 10 + d;
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  if (body.empty()) Fail(text, "empty");

  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational result;
  if (const auto slash = body.find('/'); slash != std::string_view::npos) {
    const std::int64_t num = ParseDigits(text, body.substr(0, slash));
    const std::int64_t den = ParseDigits(text, body.substr(slash + 1));
    if (den == 0) Fail(text, "zero denominator");
    result = Rational(num, den);
  } else if (const auto dot = body.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = body.substr(0, dot);
    const std::string_view frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty()) Fail(text, "expected digits");
    if (frac.size() > 18) Fail(text, "too many decimal places");
    std::int64_t scale = 1;
    for (std::size_t k = 0; k < frac.size(); ++k) scale *= 10;
    const std::int64_t w = whole.empty() ? 0 : ParseDigits(text, whole);
    const std::int64_t f = frac.empty() ? 0 : ParseDigits(text, frac);
    if (w > (std::numeric_limits<std::int64_t>::max() - f) / scale) {
      Fail(text, "out of 64-bit range");
    }
    result = Rational(w * scale + f, scale);
  } else {
    result = Rational(ParseDigits(text, body));
  }
  return negative ? -result : result;
}

std::string ToString(const Rational& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

}  // namespace gamesym
