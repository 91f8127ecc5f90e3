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

#ifndef GAMESYM_PARALLEL_H_
#define GAMESYM_PARALLEL_H_

#include <cstddef>
#include <cstdint>

namespace gamesym {

// Selects between the OpenMP kernel and the plain loop it replaces. Both
// produce identical results; the serial path is kept as the reference.
enum class Exec { kSerial, kParallel };

// Runs body(k) for k in [0, count). Bodies must not throw and must write
// only to slot k of preallocated output, so the merge is deterministic.
template <class Body>
void ParallelFor(std::size_t count, Exec exec, Body&& body) {
  if (exec == Exec::kParallel) {
    const auto total = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t k = 0; k < total; ++k) {
      body(static_cast<std::size_t>(k));
    }
  } else {
    for (std::size_t k = 0; k < count; ++k) body(k);
  }
}

}  // namespace gamesym

#endif  // GAMESYM_PARALLEL_H_
