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

#ifndef GAMESYM_TOOLS_CLI_H_
#define GAMESYM_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace gamesym::cli {

// Exit status: 0 success, 1 conflict reported under --strict (or a failing
// verify), 2 input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConflict = 1;
inline constexpr int kExitInput = 2;

// Runs one command; args excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gamesym::cli

#endif  // GAMESYM_TOOLS_CLI_H_
