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

#ifndef GAMESYM_RATIONAL_H_
#define GAMESYM_RATIONAL_H_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace gamesym {

// Payoffs are exact. Only equality is ever needed by the analyses.
using Rational = boost::rational<std::int64_t>;

// Accepts "7", "-3/4", "0.25", "-1.5". Exponents and non-finite values are
// rejected. Throws Error(kParse).
Rational ParseRational(std::string_view text);

// "7" for integers, "p/q" otherwise.
std::string ToString(const Rational& value);

}  // namespace gamesym

#endif  // GAMESYM_RATIONAL_H_
