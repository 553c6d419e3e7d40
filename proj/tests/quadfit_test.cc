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

#include "helpers.h"

namespace pfrlab {
namespace {

QuadPoly RandomQuad(std::size_t d, Rng& rng) {
  QuadPoly q(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) q.SetForm(i, j, rng.Bernoulli(0.5));
  }
  q.mutable_linear() = BitVec::Random(d, rng);
  q.set_constant(rng.Bernoulli(0.5));
  return q;
}

int64_t Correlate(const QuadPoly& q, const std::vector<int8_t>& g) {
  int64_t s = 0;
  for (uint64_t z = 0; z < g.size(); ++z) {
    s += q.Eval(BitVec::FromWord(q.dim(), z)) ? -g[z] : g[z];
  }
  return s;
}

TEST(QuadPoly, EvalMatchesMonomials) {
  Rng rng(201);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 1 + rng.Below(7);
    const QuadPoly q = RandomQuad(d, rng);
    for (uint64_t z = 0; z < (uint64_t{1} << d); ++z) {
      int v = q.constant();
      for (std::size_t i = 0; i < d; ++i) {
        v ^= q.linear().Get(i) && ((z >> i) & 1U);
        for (std::size_t j = i + 1; j < d; ++j) {
          v ^= q.form().Get(i, j) && ((z >> i) & 1U) && ((z >> j) & 1U);
        }
      }
      EXPECT_EQ(q.Eval(BitVec::FromWord(d, z)), v == 1);
    }
  }
  BitMat lower(3, 3);
  lower.Set(2, 1, true);
  EXPECT_THROW(QuadPoly(lower, BitVec(3), false), Error);
}

TEST(QuadPoly, BilinearPartIsRecovered) {
  Rng rng(203);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t m = 1 + rng.Below(4), n = 1 + rng.Below(4);
    const QuadPoly q = RandomQuad(m + n, rng);
    const BitMat mm = QuadToBilinear(q, m, n);
    const BitVec zx(m), zy(n);
    for (uint64_t x = 0; x < (uint64_t{1} << m); ++x) {
      for (uint64_t y = 0; y < (uint64_t{1} << n); ++y) {
        const BitVec xv = BitVec::FromWord(m, x), yv = BitVec::FromWord(n, y);
        const bool mixed = q.Eval(xv.Concat(yv)) ^ q.Eval(xv.Concat(zy)) ^
                           q.Eval(zx.Concat(yv)) ^ q.Eval(zx.Concat(zy));
        EXPECT_EQ(mixed, mm.Apply(xv).Dot(yv));
      }
    }
    const BitMat b = BitMat::Random(n, m, rng);
    const BitVec v = BitVec::Random(n, rng);
    EXPECT_EQ(QuadToBilinear(QuadPoly::Bilinear(b, v), m, n), b);
  }
}

TEST(ExhaustiveQuadFit, MatchesDoubleLoopEnumeration) {
  Rng rng(207);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 1 + rng.Below(5);
    std::vector<int8_t> g(std::size_t{1} << d);
    for (auto& x : g) x = static_cast<int8_t>(static_cast<int>(rng.Below(3)) - 1);
    const QuadFitResult r = ExhaustiveQuadFit(g, d);
    EXPECT_EQ(r.log2_denominator, d);
    EXPECT_EQ(r.numerator, oracle::BestQuadNumerator(g, d));
    EXPECT_EQ(Correlate(r.q, g), r.numerator);
  }
}

TEST(ExhaustiveQuadFit, FindsPlantedQuadratic) {
  Rng rng(211);
  const QuadPoly q = RandomQuad(5, rng);
  std::vector<int8_t> g(32);
  for (uint64_t z = 0; z < 32; ++z) g[z] = q.Eval(BitVec::FromWord(5, z)) ? -1 : 1;
  const QuadFitResult r = ExhaustiveQuadFit(g, 5);
  EXPECT_EQ(r.numerator, 32);
  EXPECT_EQ(r.q, q);
  EXPECT_DOUBLE_EQ(r.correlation(), 1.0);
  EXPECT_THROW(ExhaustiveQuadFit(std::vector<int8_t>(256), 8), Error);
}

TEST(CorrelationTarget, TableMatchesDefinition) {
  Rng rng(213);
  FuncTable f(3, 2);
  for (uint64_t x = 0; x < 8; ++x) f.set(x, BitVec::Random(2, rng));
  CorrelationTarget t(f);
  const std::vector<int8_t> table = t.Table();
  ASSERT_EQ(table.size(), 32u);
  for (uint64_t x = 0; x < 8; ++x) {
    for (uint64_t y = 0; y < 4; ++y) {
      const int expected = f.at(x).Dot(BitVec::FromWord(2, y)) ? -1 : 1;
      EXPECT_EQ(table[x | (y << 3)], expected);
    }
  }
}

// f defined on a subspace only, zero-extended nowhere else.
class SubspaceFunction : public PartialFunction {
 public:
  SubspaceFunction(Subspace domain, AffineMap map)
      : domain_(std::move(domain)), map_(std::move(map)) {}
  std::size_t domain_dim() const override { return map_.domain_dim(); }
  std::size_t codomain_dim() const override { return map_.codomain_dim(); }
  std::optional<BitVec> Eval(const BitVec& x) override {
    if (!domain_.Contains(x)) return std::nullopt;
    return map_.Apply(x);
  }

 private:
  Subspace domain_;
  AffineMap map_;
};

TEST(BilinearQuadFit, RecoversExactAffineMap) {
  Rng rng(217);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 2 + rng.Below(7), n = 1 + rng.Below(6);
    const BitMat mm = BitMat::Random(n, m, rng);
    const BitVec v = BitVec::Random(n, rng);
    FuncTable f(m, n);
    for (uint64_t x = 0; x < f.size(); ++x) {
      f.set(x, mm.Apply(BitVec::FromWord(m, x)) + v);
    }
    CorrelationTarget target(f);
    const BilinearFitResult r = BilinearQuadFit(target, {}, rng);
    EXPECT_EQ(r.m, mm);
    EXPECT_EQ(r.v, v);
    EXPECT_EQ(r.agreement, f.size());
    EXPECT_DOUBLE_EQ(r.correlation(), 1.0);
  }
}

TEST(BilinearQuadFit, SupportSubspaceCoordinates) {
  Rng rng(219);
  const std::size_t m = 12, n = 5;
  const Subspace w = RandomSubspace(m, 6, rng);
  const AffineMap map(BitMat::Random(n, m, rng), BitVec::Random(n, rng));
  SubspaceFunction f(w, map);
  CorrelationTarget target(f, w);
  EXPECT_EQ(target.m(), 6u);
  const BilinearFitResult r = BilinearQuadFit(target, {}, rng);
  EXPECT_EQ(r.agreement, uint64_t{1} << 6);
  // The fitted map agrees with the planted one on all of W once composed with
  // the coordinate map.
  const BitMat full = r.m * target.CoordinateMap();
  for (const auto& x : w.Enumerate()) {
    EXPECT_EQ(full.Apply(x) + r.v, map.Apply(x));
  }
}

TEST(BilinearQuadFit, TiesAreReportedOrDeferred) {
  // f(x) = x0 x1 on F_2^2: every frequency of the single slice has the same
  // weight.
  FuncTable f(2, 1);
  f.set(3, BitVec::FromString("1"));
  Rng rng(223);
  CorrelationTarget strict(f);
  EXPECT_THROW(BilinearQuadFit(strict, {}, rng), AmbiguityError);
  CorrelationTarget lenient(f);
  BilinearFitConfig cfg;
  cfg.ties = TiePolicy::kDeferUnresolved;
  const BilinearFitResult r = BilinearQuadFit(lenient, cfg, rng);
  EXPECT_EQ(r.agreement, 3u);
  EXPECT_EQ(r.unresolved_used, 1u);
}

TEST(BilinearQuadFit, NoisyTableStaysCloseToOptimum) {
  Rng rng(227);
  for (int trial = 0; trial < 20; ++trial) {
    const AffineInstance inst = GenPlantedAffine(3, 3, 0.875, rng);
    FuncTable f = inst.f;
    CorrelationTarget target(f);
    BilinearFitConfig cfg;
    cfg.ties = TiePolicy::kDeferUnresolved;
    cfg.extra_directions = 8;
    const BilinearFitResult r = BilinearQuadFit(target, cfg, rng);
    const uint64_t best = oracle::BestAffineAgreement(
        testing_util::TableWords(f), 3, 3);
    EXPECT_LE(r.agreement, best);
    EXPECT_GE(r.agreement + 2, best);
  }
}

}  // namespace
}  // namespace pfrlab
