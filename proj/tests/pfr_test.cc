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

#include <gtest/gtest.h>

#include <cmath>

#include "helpers.h"

namespace pfrlab {
namespace {

using testing_util::RandomSet;
using testing_util::Words;

TEST(Sizing, Formulas) {
  EXPECT_EQ(CeilLog2(1), 0u);
  EXPECT_EQ(CeilLog2(2), 1u);
  EXPECT_EQ(CeilLog2(1024), 10u);
  EXPECT_EQ(CeilLog2(1025), 11u);
  // ceil(28 * 10) + 56.
  EXPECT_EQ(DefaultSampleCount(1024, 1), 336u);
  EXPECT_EQ(DefaultSampleCount(1024, 2), 392u);
  // 10 + ceil(log2 16) + 10.
  EXPECT_EQ(DefaultModelDim(1024, 2, 10), 24u);
  // ceil(2 * 10 / 0.5) * ceil(log2 10).
  EXPECT_EQ(LocalizationSampleCount(10, 0.5, 0.1), 160u);
  const std::size_t h = HoeffdingSampleCount(1.0 / 16, 0.9, 64);
  EXPECT_EQ(h, static_cast<std::size_t>(
                   std::ceil(std::log(2.0 * 64 / 0.1) / (2.0 / 256))));
}

TEST(Localize, SpanOfSamplesAndCost) {
  Rng rng(301);
  const PlantedInstance inst = GenPlantedCover(14, 6, 4, 0.0, rng);
  MembershipOracle oracle(inst.set);
  const Subspace u = Localize(oracle, 200, rng);
  EXPECT_EQ(oracle.sample_draws(), 200u);
  EXPECT_EQ(oracle.membership_queries(), 0u);
  std::size_t inside = 0;
  for (const auto& a : inst.set) inside += u.Contains(a);
  EXPECT_EQ(inside, inst.set.size());
  EXPECT_THROW(Localize(oracle, 0, rng), Error);
}

TEST(EnumerateMembers, ExactlyTwoToTheDimQueries) {
  Rng rng(303);
  const PointSet a = RandomSet(10, 300, rng);
  const Subspace u = RandomSubspace(10, 7, rng);
  MembershipOracle oracle(a);
  const PointSet members = EnumerateMembers(u, oracle);
  EXPECT_EQ(oracle.membership_queries(), 128u);
  std::size_t expected = 0;
  for (const auto& x : a) expected += u.Contains(x);
  EXPECT_EQ(members.size(), expected);
  for (const auto& x : members) EXPECT_TRUE(a.Contains(x) && u.Contains(x));
}

TEST(DenseModel, CertifiedMapIsIsomorphism) {
  Rng rng(307);
  for (int trial = 0; trial < 20; ++trial) {
    const PlantedInstance inst = GenPlantedCover(12, 4, 3, 0.0, rng);
    MembershipOracle oracle(inst.set);
    const Subspace u = Localize(oracle, 100, rng);
    LocalizedOracle local(oracle, u);
    const PointSet aprime = EnumerateMembers(u, local);
    const DenseModel model =
        BuildDenseModel(u, local, 10, rng, DenseModelParams{}, &aprime);
    ASSERT_TRUE(model.sf);
    EXPECT_TRUE(model.exact_checked);
    EXPECT_TRUE(FreimanIsoCheck(model.sf->pi(), aprime).isomorphic);
  }
}

TEST(DenseModel, FailsWhenNoMapFits) {
  Rng rng(309);
  const PointSet a = RandomSet(10, 200, rng);
  const Subspace u = Subspace::Full(10);
  MembershipOracle oracle(a);
  DenseModelParams params;
  params.restarts = 2;
  // A one-dimensional target cannot be injective on 4A.
  EXPECT_THROW(BuildDenseModel(u, oracle, 1, rng, params, &a), Error);
}

TEST(RestrictedHomFit, ExactAffineGivesFullAgreement) {
  Rng rng(311);
  for (int trial = 0; trial < 10; ++trial) {
    const AffineInstance inst = GenPlantedAffine(8, 6, 1.0, rng);
    FuncTable f = inst.f;
    const HomFitResult r = RestrictedHomFit(f, {}, rng);
    EXPECT_EQ(r.agreement, 256u);
    EXPECT_EQ(r.m, inst.m);
    EXPECT_EQ(r.v, inst.v);
  }
}

TEST(RestrictedHomFit, AgreementIsExactCount) {
  Rng rng(313);
  const AffineInstance inst = GenPlantedAffine(7, 5, 0.6, rng);
  FuncTable f = inst.f;
  const HomFitResult r = RestrictedHomFit(f, DefaultFunctionFitConfig(5), rng);
  uint64_t count = 0;
  for (uint64_t x = 0; x < 128; ++x) {
    const BitVec xv = BitVec::FromWord(7, x);
    count += f(xv) == r.m.Apply(xv) + r.v;
  }
  EXPECT_EQ(r.agreement, count);
}

TEST(ExtractSubspace, RespectsCap) {
  Rng rng(317);
  const BitMat m = BitMat::Random(10, 6, rng);
  const Subspace im = ImageBasis(m);
  for (std::size_t cap : {1u, 4u, 7u, 64u, 1000u}) {
    const Subspace v = ExtractSubspace(m, BitVec(10), cap);
    EXPECT_LE(std::size_t{1} << v.dim(), cap);
    EXPECT_TRUE(v.IsSubspaceOf(im));
  }
  EXPECT_EQ(ExtractSubspace(m, BitVec(10), 1 << 10), im);
}

TEST(Pipeline, SubspaceInput) {
  Rng rng(319);
  const Subspace v = RandomSubspace(14, 7, rng);
  const PointSet a = PointSet::FromVectors(14, v.Enumerate());
  for (uint64_t seed = 1; seed <= 5; ++seed) {
    PipelineConfig cfg;
    cfg.seed = seed;
    const PipelineReport r = RunPipeline(a, cfg);
    EXPECT_TRUE(r.success) << r.error;
    EXPECT_TRUE(r.certificate.covered);
    EXPECT_LE(std::size_t{1} << r.dim_v, a.size());
    EXPECT_TRUE(r.accounting_ok);
    EXPECT_EQ(r.membership_queries, r.expected_queries);
    EXPECT_EQ(r.samples, r.t);
  }
}

TEST(Pipeline, ReportsAreReproducible) {
  Rng rng(321);
  const PlantedInstance inst = GenPlantedCover(12, 5, 4, 0.0, rng);
  PipelineConfig cfg;
  cfg.k = inst.doubling;
  cfg.seed = 9;
  const PipelineReport a = RunPipeline(inst.set, cfg);
  const PipelineReport b = RunPipeline(inst.set, cfg);
  EXPECT_EQ(a.certificate.subspace, b.certificate.subspace);
  EXPECT_EQ(a.certificate.reps, b.certificate.reps);
  EXPECT_EQ(a.membership_queries, b.membership_queries);
}

TEST(Pipeline, PlantedCoverIsCoveredIndependently) {
  Rng rng(323);
  const PlantedInstance inst = GenPlantedCover(14, 6, 4, 0.0, rng);
  PipelineConfig cfg;
  cfg.k = inst.doubling;
  cfg.seed = 4;
  const PipelineReport r = RunPipeline(inst.set, cfg);
  ASSERT_TRUE(r.success) << r.error;
  // Recheck against the explicit set with nothing from the report but the
  // basis and representatives.
  const Subspace v = r.certificate.subspace;
  std::set<BitVec> reps;
  for (const auto& x : r.certificate.reps) reps.insert(v.Reduce(x));
  for (const auto& a : inst.set) EXPECT_TRUE(reps.count(v.Reduce(a)));
  EXPECT_LE(r.certificate.cover_size, r.cover_bound);
}

TEST(Pipeline, MaxCoverTurnsIntoFailure) {
  Rng rng(325);
  const PlantedInstance inst = GenPlantedCover(12, 5, 4, 0.0, rng);
  PipelineConfig cfg;
  cfg.k = inst.doubling;
  cfg.max_cover = 0;
  EXPECT_FALSE(RunPipeline(inst.set, cfg).success);
}

}  // namespace
}  // namespace pfrlab
