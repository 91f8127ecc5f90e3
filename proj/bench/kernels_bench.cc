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

#include <benchmark/benchmark.h>

#include "gamesym/oracle.h"
#include "gamesym/relations.h"
#include "gamesym/roles.h"
#include "gamesym/symmetry.h"

namespace gamesym {
namespace {

Game BenchGame(int players, int actions) {
  oracle::GeneratorConfig config;
  config.players = players;
  config.actions = actions;
  config.seed = 42;
  config.min_payoff = 0;
  config.max_payoff = 1;
  config.mode = oracle::GeneratorMode::kSelfSymmetric;
  return oracle::Generate(config);
}

void BM_InvarianceGroup(benchmark::State& state) {
  const Game g = BenchGame(static_cast<int>(state.range(0)), 3);
  const Exec exec = state.range(1) ? Exec::kParallel : Exec::kSerial;
  for (auto _ : state) benchmark::DoNotOptimize(InvarianceGroup(g, exec));
}
BENCHMARK(BM_InvarianceGroup)->ArgsProduct({{4, 5, 6}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

void BM_NaiveInvarianceGroup(benchmark::State& state) {
  const Game g = BenchGame(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(oracle::NaiveInvarianceGroup(g));
}
BENCHMARK(BM_NaiveInvarianceGroup)->Arg(4)->Arg(5)->Arg(6)
    ->Unit(benchmark::kMillisecond);

void BM_RelationMatrix(benchmark::State& state) {
  const Game g = BenchGame(static_cast<int>(state.range(0)), 3);
  const Exec exec = state.range(1) ? Exec::kParallel : Exec::kSerial;
  const auto x = static_cast<PlayerRelation>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeRelationMatrix(g, x, exec));
  state.SetLabel(std::string(RelationName(x)));
}
BENCHMARK(BM_RelationMatrix)
    ->ArgsProduct({{4, 5}, {0, 1},
                   {static_cast<int>(PlayerRelation::kB),
                    static_cast<int>(PlayerRelation::kM),
                    static_cast<int>(PlayerRelation::kPT)}})
    ->Unit(benchmark::kMillisecond);

void BM_RoleTable(benchmark::State& state) {
  const Game g = BenchGame(static_cast<int>(state.range(0)), 3);
  const Exec exec = state.range(1) ? Exec::kParallel : Exec::kSerial;
  for (auto _ : state) {
    benchmark::DoNotOptimize(RoleRelationTable(g, RoleRelation::kSimulates, exec));
  }
}
BENCHMARK(BM_RoleTable)->ArgsProduct({{4, 5}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace gamesym

BENCHMARK_MAIN();
