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

using testing_util::Words;

TEST(BitVec, StringIsBigEndian) {
  const BitVec v = BitVec::FromString("0101");
  EXPECT_EQ(v.dim(), 4u);
  EXPECT_TRUE(v.Get(0));
  EXPECT_FALSE(v.Get(1));
  EXPECT_TRUE(v.Get(2));
  EXPECT_EQ(v.ToWord(), 5u);
  EXPECT_EQ(v.ToString(), "0101");
  EXPECT_THROW(BitVec::FromString("01x"), Error);
}

TEST(BitVec, WideRoundTripAndArithmetic) {
  Rng rng(7);
  for (std::size_t n : {1u, 63u, 64u, 65u, 130u}) {
    const BitVec a = BitVec::Random(n, rng);
    const BitVec b = BitVec::Random(n, rng);
    EXPECT_EQ(BitVec::FromString(a.ToString()), a);
    EXPECT_TRUE((a + a).IsZero());
    EXPECT_EQ((a + b) + b, a);
    std::size_t dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += a.Get(i) && b.Get(i);
    EXPECT_EQ(a.Dot(b), dot % 2 == 1);
    EXPECT_EQ(a.Concat(b).Slice(n, n), b);
    EXPECT_EQ(a.Concat(b).Slice(0, n), a);
  }
  EXPECT_THROW(BitVec(3) + BitVec(4), Error);
}

TEST(BitVec, OrderMatchesIntegerOrder) {
  for (uint64_t x = 0; x < 64; ++x) {
    for (uint64_t y = 0; y < 64; ++y) {
      EXPECT_EQ(BitVec::FromWord(6, x) < BitVec::FromWord(6, y), x < y);
    }
  }
}

TEST(Subspace, SpanMatchesClosure) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.Below(10);
    const std::size_t k = rng.Below(8);
    std::vector<BitVec> gens;
    for (std::size_t i = 0; i < k; ++i) gens.push_back(BitVec::Random(n, rng));
    const Subspace s = Subspace::Span(gens, n);
    const oracle::Points closure = oracle::SpanClosure(Words(gens));
    ASSERT_EQ(std::size_t{1} << s.dim(), closure.size());
    oracle::Points enumerated = Words(s.Enumerate());
    std::sort(enumerated.begin(), enumerated.end());
    EXPECT_EQ(enumerated, closure);
    for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
      const bool member =
          std::binary_search(closure.begin(), closure.end(), x);
      EXPECT_EQ(s.Contains(BitVec::FromWord(n, x)), member);
    }
  }
}

TEST(Subspace, ReduceIsCanonicalCosetRepresentative) {
  Rng rng(3);
  const std::size_t n = 8;
  const Subspace s = RandomSubspace(n, 4, rng);
  for (uint64_t x = 0; x < 256; ++x) {
    const BitVec v = BitVec::FromWord(n, x);
    const BitVec r = s.Reduce(v);
    EXPECT_TRUE(s.Contains(v + r));
    s.ForEachInCoset(v, [&](const BitVec& y) { EXPECT_EQ(s.Reduce(y), r); });
  }
}

TEST(Subspace, CanonicalBasisIgnoresGeneratorOrder) {
  Rng rng(5);
  std::vector<BitVec> gens;
  for (int i = 0; i < 6; ++i) gens.push_back(BitVec::Random(12, rng));
  const Subspace a = Subspace::Span(gens, 12);
  std::reverse(gens.begin(), gens.end());
  gens.push_back(gens[0] + gens[1]);
  EXPECT_EQ(Subspace::Span(gens, 12), a);
}

TEST(Subspace, EnumerationCap) {
  EXPECT_THROW(Subspace::Full(22).Enumerate(), Error);
  EXPECT_EQ(Subspace::Full(4).Enumerate(4).size(), 16u);
}

TEST(BitMat, RankAgreesWithIndependentElimination) {
  Rng rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng.Below(12);
    const std::size_t cols = 1 + rng.Below(12);
    BitMat m = BitMat::Random(rows, cols, rng);
    // Force some dependencies.
    if (rows > 2 && rng.Bernoulli(0.5)) {
      m.mutable_row(rows - 1) = m.row(0) + m.row(1);
    }
    const oracle::Points row_words = testing_util::RowWords(m);
    EXPECT_EQ(Rank(m), oracle::RankLowPivot(row_words));
    EXPECT_EQ(Rank(m), oracle::RankBySpan(row_words));
    EXPECT_EQ(Rank(m.Transpose()), Rank(m));
    const Subspace ker = KernelBasis(m);
    EXPECT_EQ(ker.dim() + Rank(m), cols);
    for (const BitVec& k : ker.basis()) EXPECT_TRUE(m.Apply(k).IsZero());
    EXPECT_EQ(ImageBasis(m).dim(), Rank(m));
  }
}

TEST(BitMat, ProductMatchesComposition) {
  Rng rng(17);
  const BitMat a = BitMat::Random(5, 7, rng);
  const BitMat b = BitMat::Random(7, 3, rng);
  for (uint64_t x = 0; x < 8; ++x) {
    const BitVec v = BitVec::FromWord(3, x);
    EXPECT_EQ((a * b).Apply(v), a.Apply(b.Apply(v)));
  }
  EXPECT_EQ(BitMat::Identity(4).Apply(BitVec::FromWord(4, 9)),
            BitVec::FromWord(4, 9));
}

TEST(RestrictedInverse, FibersAreCosetsOfTheKernel) {
  Rng rng(19);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 10;
    const Subspace u = RandomSubspace(n, 2 + rng.Below(6), rng);
    const LinearMap pi = RandomLinearMap(u, 1 + rng.Below(6), rng);
    const RestrictedInverse inv(pi, u);
    EXPECT_EQ(inv.kernel().dim() + inv.image().dim(), u.dim());
    for (const BitVec& x : u.Enumerate()) {
      const auto pre = inv.Preimage(pi.Apply(x));
      ASSERT_TRUE(pre.has_value());
      EXPECT_TRUE(u.Contains(*pre));
      EXPECT_TRUE(inv.kernel().Contains(*pre + x));
    }
    for (uint64_t y = 0; y < (uint64_t{1} << pi.codomain_dim()); ++y) {
      const BitVec v = BitVec::FromWord(pi.codomain_dim(), y);
      EXPECT_EQ(inv.Preimage(v).has_value(), inv.image().Contains(v));
    }
  }
}

TEST(Wht, MatchesDefinition) {
  Rng rng(23);
  for (std::size_t d = 0; d <= 7; ++d) {
    std::vector<int64_t> h(std::size_t{1} << d);
    for (auto& x : h) x = static_cast<int64_t>(rng.Below(21)) - 10;
    const Spectrum s = Wht(h);
    const std::vector<int64_t> ref = oracle::Dft(h);
    ASSERT_EQ(s.size(), ref.size());
    for (std::size_t z = 0; z < ref.size(); ++z) EXPECT_EQ(s.numerator(z), ref[z]);
    EXPECT_EQ(s.dim(), d);
  }
}

TEST(Wht, ParsevalAndInvolution) {
  Rng rng(29);
  for (std::size_t d = 1; d <= 12; ++d) {
    std::vector<int64_t> h(std::size_t{1} << d);
    for (auto& x : h) x = static_cast<int64_t>(rng.Below(3)) - 1;
    const Spectrum s = Wht(h);
    Uint128 energy = 0;
    for (int64_t x : h) energy += static_cast<Uint128>(x * x);
    EXPECT_TRUE(s.SumOfSquares() == (energy << d));
    std::vector<int64_t> twice(s.numerators().begin(), s.numerators().end());
    WhtInPlace(twice);
    for (std::size_t i = 0; i < h.size(); ++i) {
      EXPECT_EQ(twice[i], h[i] * static_cast<int64_t>(h.size()));
    }
  }
}

TEST(Wht, CharacterIsOneHot) {
  for (uint64_t a = 0; a < 64; ++a) {
    std::vector<int64_t> chi(64);
    for (uint64_t x = 0; x < 64; ++x) chi[x] = oracle::Parity(a & x) ? -1 : 1;
    const Spectrum s = Wht(chi);
    for (uint64_t z = 0; z < 64; ++z) {
      EXPECT_EQ(s.numerator(z), z == a ? 64 : 0);
    }
    EXPECT_DOUBLE_EQ(s.coefficient(a), 1.0);
  }
}

TEST(Wht, RejectsNonPowerOfTwo) {
  std::vector<int64_t> bad(6, 1);
  EXPECT_THROW(WhtInPlace(bad), Error);
}

TEST(PointSet, DenseAndSparseBehaveAlike) {
  Rng rng(31);
  for (std::size_t n : {8u, 24u}) {
    PointSet s(n);
    std::vector<BitVec> seen;
    for (int i = 0; i < 200; ++i) {
      const BitVec v = BitVec::Random(n, rng);
      const bool fresh =
          std::find(seen.begin(), seen.end(), v) == seen.end();
      EXPECT_EQ(s.Insert(v), fresh);
      if (fresh) seen.push_back(v);
    }
    EXPECT_EQ(s.size(), seen.size());
    for (const auto& v : seen) EXPECT_TRUE(s.Contains(v));
    const PointSet sorted = s.Sorted();
    EXPECT_TRUE(std::is_sorted(sorted.begin(), sorted.end()));
    EXPECT_TRUE(sorted.SameElements(s));
  }
  EXPECT_THROW(PointSet(3).Sample(rng), Error);
}

}  // namespace
}  // namespace pfrlab
