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

#include "gamesym/parallel.h"

#include <atomic>
#include <vector>

#include <gtest/gtest.h>

#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"
#include "test_support.h"

namespace gamesym {
namespace {

TEST(ParallelFor, VisitsEveryIndexOnce) {
  for (Exec exec : {Exec::kSerial, Exec::kParallel}) {
    std::vector<std::atomic<int>> hits(1000);
    ParallelFor(hits.size(), exec, [&](std::size_t k) { ++hits[k]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(SerialVsParallel, KernelsAgree) {
  for (const Game& g : testing::Corpus(60, testing::AllShapes())) {
    EXPECT_EQ(InvarianceGroup(g, Exec::kSerial),
              InvarianceGroup(g, Exec::kParallel));
    const Classification a = Classify(g, Exec::kSerial);
    const Classification b = Classify(g, Exec::kParallel);
    EXPECT_EQ(a.anonymous.holds, b.anonymous.holds);
    EXPECT_EQ(a.symmetric.holds, b.symmetric.holds);
    EXPECT_EQ(a.self_anonymous.holds, b.self_anonymous.holds);
    EXPECT_EQ(a.self_symmetric.holds, b.self_symmetric.holds);
    EXPECT_EQ(a.dm_symmetric.holds, b.dm_symmetric.holds);
    for (PlayerRelation x : kAllPlayerRelations) {
      const RelationMatrix s = ComputeRelationMatrix(g, x, Exec::kSerial);
      const RelationMatrix p = ComputeRelationMatrix(g, x, Exec::kParallel);
      for (std::size_t c = 0; c < s.cells.size(); ++c) {
        EXPECT_EQ(s.cells[c].holds, p.cells[c].holds);
        EXPECT_EQ(s.cells[c].witness, p.cells[c].witness);
        EXPECT_EQ(s.cells[c].witness_of_profile, p.cells[c].witness_of_profile);
      }
    }
    EXPECT_EQ(TwistedClasses(g, Exec::kSerial),
              TwistedClasses(g, Exec::kParallel));
  }
}

}  // namespace
}  // namespace gamesym
