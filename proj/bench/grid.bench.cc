// Copyright 2026 The zenogate Authors
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

#include "zeno/grid.h"

namespace {

void BM_scan_grid_serial(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const zeno::GridObjective objective{n, 0.5, zeno::ErrorAggregate::max, zeno::ControlLoss::none()};
    const auto grid = zeno::default_grid(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeno::scan_grid_serial(objective, grid));
    }
}
BENCHMARK(BM_scan_grid_serial)->Arg(10)->Arg(60)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_scan_grid_parallel(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    const zeno::GridObjective objective{n, 0.5, zeno::ErrorAggregate::max, zeno::ControlLoss::none()};
    const auto grid = zeno::default_grid(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(zeno::scan_grid_parallel(objective, grid));
    }
}
BENCHMARK(BM_scan_grid_parallel)->Arg(10)->Arg(60)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
