/*
 * Copyright 2026 The pfrlab Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <benchmark/benchmark.h>

#include "pfrlab/pfrlab.h"

namespace pfrlab {
namespace {

// Planted union of four cosets of a subspace of dimension range(0) in F_2^16.
void BM_Pipeline(benchmark::State& state) {
  Rng rng(11);
  const PlantedInstance inst =
      GenPlantedCover(16, static_cast<std::size_t>(state.range(0)), 4, 0.0, rng);
  PipelineConfig cfg;
  cfg.k = inst.doubling;
  uint64_t seed = 1;
  uint64_t queries = 0;
  for (auto _ : state) {
    cfg.seed = seed++;
    const PipelineReport r = RunPipeline(inst.set, cfg);
    queries = r.membership_queries;
    benchmark::DoNotOptimize(r.success);
  }
  state.counters["queries"] = static_cast<double>(queries);
}
BENCHMARK(BM_Pipeline)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_RestrictedHomFit(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  Rng rng(13);
  const AffineInstance inst = GenPlantedAffine(m, 6, 0.5, rng);
  const HomFitConfig cfg = DefaultFunctionFitConfig(6);
  for (auto _ : state) {
    FuncTable f = inst.f;
    benchmark::DoNotOptimize(RestrictedHomFit(f, cfg, rng).agreement);
  }
}
BENCHMARK(BM_RestrictedHomFit)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_QuadrupleAgreement(benchmark::State& state) {
  Rng rng(17);
  const SmallImageInstance inst =
      GenSmallImage(static_cast<std::size_t>(state.range(0)), 6, 4, rng);
  for (auto _ : state) benchmark::DoNotOptimize(QuadrupleAgreementExact(inst.f).hits);
}
BENCHMARK(BM_QuadrupleAgreement)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace pfrlab
