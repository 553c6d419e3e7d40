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

using testing_util::FromWords;
using testing_util::RandomSet;
using testing_util::Words;

TEST(Sumset, BothPathsMatchPairLoop) {
  Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 2 + rng.Below(9);
    const std::size_t cap = std::size_t{1} << n;
    const PointSet a = RandomSet(n, 1 + rng.Below(std::min<std::size_t>(cap, 80)), rng);
    const PointSet b = RandomSet(n, 1 + rng.Below(std::min<std::size_t>(cap, 80)), rng);
    const oracle::Points ref = oracle::Sumset(Words(a), Words(b));
    EXPECT_EQ(Words(Sumset(a, b)), ref);
    EXPECT_EQ(Words(SumsetPairwise(a, b)), ref);
  }
}

TEST(Sumset, ConvolutionPathOnDenseInputs) {
  Rng rng(43);
  // Large enough that the transform is cheaper than the pair loop.
  const PointSet a = RandomSet(10, 600, rng);
  const PointSet b = RandomSet(10, 500, rng);
  const PointSet s = Sumset(a, b);
  EXPECT_EQ(Words(s), oracle::Sumset(Words(a), Words(b)));
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
}

TEST(Sumset, WideAmbientUsesHashing) {
  Rng rng(47);
  const PointSet a = RandomSet(40, 30, rng);
  const PointSet b = RandomSet(40, 25, rng);
  const PointSet s = Sumset(a, b);
  std::set<BitVec> ref;
  for (const auto& x : a) {
    for (const auto& y : b) ref.insert(x + y);
  }
  ASSERT_EQ(s.size(), ref.size());
  for (const auto& z : ref) EXPECT_TRUE(s.Contains(z));
}

TEST(Sumset, BudgetAndDimensionChecks) {
  Rng rng(53);
  const PointSet a = RandomSet(12, 200, rng);
  EXPECT_THROW(Sumset(a, a, 100), Error);
  EXPECT_THROW(Sumset(a, PointSet(11)), Error);
}

TEST(Sumset, IteratedMatchesRepeatedPairLoop) {
  Rng rng(59);
  for (int trial = 0; trial < 30; ++trial) {
    const PointSet a = RandomSet(9, 2 + rng.Below(10), rng);
    oracle::Points acc = Words(a);
    for (std::size_t k = 2; k <= 4; ++k) {
      acc = oracle::Sumset(acc, Words(a));
      EXPECT_EQ(Words(IteratedSumset(a, k)), acc) << "k=" << k;
    }
  }
}

TEST(Doubling, SubspaceAndCosets) {
  Rng rng(61);
  const Subspace v = RandomSubspace(10, 5, rng);
  const PointSet sub = PointSet::FromVectors(10, v.Enumerate());
  EXPECT_EQ(DoublingConstant(sub), 1u);
  EXPECT_EQ(DoublingConstant(7, 8), 2u);
  EXPECT_EQ(DoublingConstant(4, 4), 1u);
  EXPECT_THROW(DoublingConstant(PointSet(3)), Error);
}

TEST(Energy, MatchesTripleLoopAndFourier) {
  Rng rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.Below(8);
    const std::size_t size = 1 + rng.Below(std::min<std::size_t>(std::size_t{1} << n, 60));
    const PointSet a = RandomSet(n, size, rng);
    const uint64_t ref = oracle::EnergyTripleLoop(Words(a));
    const EnergyProfile e = AdditiveEnergy(a);
    EXPECT_EQ(e.energy, ref);
    EXPECT_EQ(AdditiveEnergyFourier(a), ref);
    uint64_t pairs = 0, squares = 0;
    for (const auto& [z, r] : e.rep_counts) {
      pairs += r;
      squares += r * r;
    }
    EXPECT_EQ(pairs, a.size() * a.size());
    EXPECT_EQ(squares, ref);
  }
}

TEST(FreimanIso, AgreesWithKernelCriterionAndQuadruples) {
  Rng rng(71);
  int isomorphic = 0, not_isomorphic = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 8;
    const PointSet a = RandomSet(n, 3 + rng.Below(10), rng);
    const Subspace u = Subspace::Full(n);
    const LinearMap pi = RandomLinearMap(u, 2 + rng.Below(7), rng);
    const oracle::Points a2 = oracle::Sumset(Words(a), Words(a));
    const oracle::Points a4 = oracle::Sumset(a2, a2);
    bool expected = true;
    for (uint64_t x : a4) {
      if (x != 0 && pi.Apply(BitVec::FromWord(n, x)).IsZero()) expected = false;
    }
    const IsoCheckResult r = FreimanIsoCheck(pi, a);
    EXPECT_EQ(r.isomorphic, expected);
    EXPECT_EQ(FreimanIsoCheckExhaustive(pi, a), expected);
    if (!r.isomorphic) {
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_FALSE(r.witness->IsZero());
      EXPECT_TRUE(pi.Apply(*r.witness).IsZero());
      EXPECT_TRUE(std::binary_search(a4.begin(), a4.end(), r.witness->ToWord()));
    }
    (expected ? isomorphic : not_isomorphic)++;
  }
  // Both outcomes were exercised.
  EXPECT_GT(isomorphic, 10);
  EXPECT_GT(not_isomorphic, 10);
}

TEST(RuzsaCover, BoundAndContainment) {
  Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 4 + rng.Below(6);
    const std::size_t cap = std::size_t{1} << n;
    const PointSet s = RandomSet(n, 1 + rng.Below(std::min<std::size_t>(cap, 20)), rng);
    const PointSet t = RandomSet(n, 1 + rng.Below(std::min<std::size_t>(cap, 60)), rng);
    const RuzsaCoverResult r = RuzsaCover(s, t);
    EXPECT_TRUE(r.verified);
    const oracle::Points ts = oracle::Sumset(Words(t), Words(s));
    EXPECT_TRUE(oracle::RuzsaBound(r.x.size(), ts.size(), s.size()));
    const oracle::Points s2 = oracle::Sumset(Words(s), Words(s));
    const oracle::Points covered = oracle::Sumset(Words(r.x), s2);
    for (uint64_t x : Words(t)) {
      EXPECT_TRUE(std::binary_search(covered.begin(), covered.end(), x));
    }
    for (const auto& x : r.x) EXPECT_TRUE(t.Contains(x));
  }
  EXPECT_THROW(RuzsaCover(PointSet(3), FromWords(3, {1})), Error);
}

TEST(VerifyCover, DetectsMissingPoints) {
  Rng rng(79);
  const PlantedInstance inst = GenPlantedCover(10, 4, 3, 0.0, rng);
  const CoverCertificate ok =
      VerifyCover(inst.set, inst.hidden_v, inst.hidden_reps);
  EXPECT_TRUE(ok.covered);
  EXPECT_EQ(ok.cover_size, 3u);
  std::vector<BitVec> fewer(inst.hidden_reps.begin(), inst.hidden_reps.end() - 1);
  EXPECT_FALSE(VerifyCover(inst.set, inst.hidden_v, fewer).covered);
}

TEST(Sanity, BoundsHoldOnRandomSets) {
  Rng rng(83);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng.Below(8);
    const PointSet a =
        RandomSet(n, 1 + rng.Below(std::min<std::size_t>(std::size_t{1} << n, 64)), rng);
    const SanityReport r = SanityBounds(a, DoublingConstant(a));
    EXPECT_TRUE(r.AllHold());
    EXPECT_EQ(r.sumset_size, oracle::Sumset(Words(a), Words(a)).size());
    EXPECT_EQ(r.span_dim, oracle::RankBySpan(Words(a)));
  }
  EXPECT_THROW(SanityBounds(FromWords(3, {1}), 0), Error);
}

TEST(Sanity, SpanBoundFormula) {
  for (std::size_t d = 0; d < 30; ++d) {
    for (uint64_t k = 1; k < 8; ++k) {
      for (std::size_t size : {1u, 5u, 64u, 1000u}) {
        const double lhs = std::ldexp(2.0 * static_cast<double>(k), static_cast<int>(d));
        const double rhs = std::ldexp(static_cast<double>(size), static_cast<int>(2 * k));
        EXPECT_EQ(SpanBoundHolds(d, k, size), lhs <= rhs)
            << d << " " << k << " " << size;
      }
    }
  }
}

}  // namespace
}  // namespace pfrlab
