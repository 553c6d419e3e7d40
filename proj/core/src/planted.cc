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

#include "pfrlab/planted.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_set>
#include <utility>

#include "pfrlab/error.h"
#include "pfrlab/setops.h"

namespace pfrlab {
namespace {

[[noreturn]] void ThrowRange(const std::string& msg) {
  throw Error(ErrorCode::kParameterRange, msg);
}

// First k entries of a uniform random permutation of 0..count-1.
std::vector<std::size_t> ChooseIndices(std::size_t count, std::size_t k,
                                       Rng& rng) {
  std::vector<std::size_t> idx(count);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  for (std::size_t i = 0; i < k; ++i) {
    std::swap(idx[i], idx[i + rng.Below(count - i)]);
  }
  idx.resize(k);
  return idx;
}

}  // namespace

Subspace RandomSubspace(std::size_t n, std::size_t dim, Rng& rng) {
  if (dim > n) ThrowRange("subspace dimension exceeds the ambient dimension");
  Subspace s(n);
  while (s.dim() < dim) s.Insert(BitVec::Random(n, rng));
  return s;
}

PlantedInstance GenPlantedCover(std::size_t n, std::size_t dim_v,
                                std::size_t cosets, double noise, Rng& rng) {
  if (dim_v > n) ThrowRange("dimV must not exceed n");
  if (cosets == 0) ThrowRange("need at least one coset");
  if (!(noise >= 0.0 && noise <= 1.0)) ThrowRange("noise must lie in [0, 1]");
  const std::size_t quotient = n - dim_v;
  if (quotient < 63 && cosets > (std::size_t{1} << quotient)) {
    ThrowRange("F_2^n has only 2^(n - dimV) cosets of V");
  }
  if (dim_v >= 63 || cosets > (kMaxPlantedPoints >> dim_v)) {
    ThrowRange("planted set would exceed " +
               std::to_string(kMaxPlantedPoints) + " points");
  }

  PlantedInstance out;
  out.n = n;
  out.dim_v = dim_v;
  out.cosets = cosets;
  out.noise = noise;
  out.hidden_v = RandomSubspace(n, dim_v, rng);

  std::unordered_set<BitVec, BitVecHash> reps;
  while (out.hidden_reps.size() < cosets) {
    BitVec r = out.hidden_v.Reduce(BitVec::Random(n, rng));
    if (reps.insert(r).second) out.hidden_reps.push_back(std::move(r));
  }

  std::vector<BitVec> points;
  points.reserve(cosets << dim_v);
  for (const BitVec& r : out.hidden_reps) {
    out.hidden_v.ForEachInCoset(
        r, [&](const BitVec& x) { points.push_back(x); }, dim_v);
  }

  const std::size_t total = points.size();
  const auto swaps =
      static_cast<std::size_t>(std::llround(noise * static_cast<double>(total)));
  if (swaps > 0) {
    const double outside = std::ldexp(1.0, static_cast<int>(n)) -
                           static_cast<double>(total);
    if (static_cast<double>(swaps) > outside) {
      ThrowRange("not enough points outside the planted union for the noise");
    }
    std::unordered_set<BitVec, BitVecHash> fresh;
    for (std::size_t i : ChooseIndices(total, swaps, rng)) {
      BitVec y;
      do {
        y = BitVec::Random(n, rng);
      } while (reps.count(out.hidden_v.Reduce(y)) != 0 || fresh.count(y) != 0);
      fresh.insert(y);
      points[i] = std::move(y);
    }
  }
  out.replaced = swaps;
  out.set = PointSet::FromVectors(n, std::move(points));
  out.doubling = DoublingConstant(out.set);
  return out;
}

AffineInstance GenPlantedAffine(std::size_t m, std::size_t n, double rho,
                                Rng& rng) {
  if (!(rho > 0.0 && rho <= 1.0)) ThrowRange("rho must lie in (0, 1]");
  AffineInstance out;
  out.f = FuncTable(m, n);
  out.m = BitMat::Random(n, m, rng);
  out.v = BitVec::Random(n, rng);
  out.rho = rho;
  const std::size_t size = std::size_t{1} << m;
  out.planted = std::min(
      size,
      static_cast<std::size_t>(std::ceil(rho * static_cast<double>(size))));
  std::vector<char> agree(size, 0);
  for (std::size_t i : ChooseIndices(size, out.planted, rng)) agree[i] = 1;
  for (std::size_t i = 0; i < size; ++i) {
    if (agree[i]) {
      out.f.set(i, out.m.Apply(BitVec::FromWord(m, i)) + out.v);
    } else {
      out.f.set(i, BitVec::Random(n, rng));
    }
  }
  return out;
}

SmallImageInstance GenSmallImage(std::size_t m, std::size_t n,
                                 std::size_t imgk, Rng& rng) {
  if (imgk == 0) ThrowRange("imgK must be at least 1");
  const auto wdim = static_cast<std::size_t>(std::bit_width(imgk) - 1);
  if (wdim > n) ThrowRange("image subspace of size imgK does not fit in F_2^n");
  SmallImageInstance out;
  out.f = FuncTable(m, n);
  out.m = BitMat::Random(n, m, rng);
  out.w = RandomSubspace(n, wdim, rng);
  out.imgk = imgk;
  const std::vector<BitVec>& basis = out.w.basis();
  for (std::size_t i = 0; i < out.f.size(); ++i) {
    BitVec h(n);
    for (const BitVec& b : basis) {
      if (rng.Next() & 1U) h += b;
    }
    out.f.set(i, out.m.Apply(BitVec::FromWord(m, i)) + h);
  }
  return out;
}

}  // namespace pfrlab
