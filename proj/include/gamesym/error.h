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

#ifndef GAMESYM_ERROR_H_
#define GAMESYM_ERROR_H_

#include <stdexcept>
#include <string>

namespace gamesym {

enum class ErrorCode {
  kSizeMismatch,
  kInvalidConstraint,
  kInvalidQuery,
  kOutOfRange,
  kParse,
  kGuard,
  kUnknownName,
};

// Every library failure is reported through this exception; the code lets the
// CLI map input errors onto exit status 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gamesym

#endif  // GAMESYM_ERROR_H_
