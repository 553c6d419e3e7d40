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

#include "pfrlab/setops.h"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "pfrlab/error.h"
#include "pfrlab/wht.h"

namespace pfrlab {
namespace {

constexpr std::size_t kDenseDim = PointSet::kDenseMaxDim;
// The pair loop may do this many times more work than the output budget.
constexpr std::size_t kPairWorkFactor = 64;

void CheckSameAmbient(const PointSet& a, const PointSet& b,
                      const char* where) {
  if (a.ambient() != b.ambient()) {
    ThrowDimensionMismatch(a.ambient(), b.ambient(), where);
  }
}

[[noreturn]] void ThrowBudget(std::size_t budget) {
  throw Error(ErrorCode::kBudgetExceeded,
              "sumset exceeds the budget of " + std::to_string(budget) +
                  " points");
}

PointSet FromBitmap(std::size_t n, const std::vector<uint64_t>& bits,
                    std::size_t count) {
  std::vector<BitVec> out;
  out.reserve(count);
  for (std::size_t w = 0; w < bits.size(); ++w) {
    for (uint64_t word = bits[w]; word != 0; word &= word - 1) {
      out.push_back(BitVec::FromWord(n, w * 64 + std::countr_zero(word)));
    }
  }
  return PointSet::FromVectors(n, std::move(out));
}

std::vector<uint64_t> Indices(const PointSet& s) {
  std::vector<uint64_t> out;
  out.reserve(s.size());
  for (const BitVec& v : s) out.push_back(v.ToWord());
  return out;
}

PointSet SumsetDense(const PointSet& a, const PointSet& b,
                     std::size_t budget) {
  const std::size_t n = a.ambient();
  const std::size_t full = std::size_t{1} << n;
  std::vector<uint64_t> bits((full + 63) / 64, 0);
  std::size_t count = 0;
  const std::vector<uint64_t> ia = Indices(a);
  const std::vector<uint64_t> ib = Indices(b);
  for (uint64_t x : ia) {
    for (uint64_t y : ib) {
      const uint64_t z = x ^ y;
      uint64_t& word = bits[z / 64];
      const uint64_t mask = uint64_t{1} << (z % 64);
      if (!(word & mask)) {
        word |= mask;
        if (++count > budget) ThrowBudget(budget);
      }
    }
    if (count == full) break;
  }
  return FromBitmap(n, bits, count);
}

PointSet SumsetHashed(const PointSet& a, const PointSet& b,
                      std::size_t budget) {
  if (a.size() > 0 && b.size() > budget * kPairWorkFactor / a.size()) {
    ThrowBudget(budget);
  }
  std::unordered_set<BitVec, BitVecHash> seen;
  BitVec z;
  for (const BitVec& x : a) {
    for (const BitVec& y : b) {
      z.AssignSum(x, y);
      if (seen.insert(z).second && seen.size() > budget) ThrowBudget(budget);
    }
  }
  std::vector<BitVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return PointSet::FromVectors(a.ambient(), std::move(out));
}

// Support of the convolution 1_A * 1_B. All intermediate values stay below
// 2^20 * 2^40, so int64 arithmetic is exact for n <= 20.
PointSet SumsetConvolution(const PointSet& a, const PointSet& b,
                           std::size_t budget) {
  const std::size_t n = a.ambient();
  const std::size_t full = std::size_t{1} << n;
  std::vector<int64_t> fa(full, 0);
  std::vector<int64_t> fb(full, 0);
  for (const BitVec& v : a) fa[v.ToWord()] = 1;
  for (const BitVec& v : b) fb[v.ToWord()] = 1;
  WhtInPlace(fa);
  WhtInPlace(fb);
  for (std::size_t z = 0; z < full; ++z) fa[z] *= fb[z];
  WhtInPlace(fa);
  std::vector<uint64_t> bits((full + 63) / 64, 0);
  std::size_t count = 0;
  for (std::size_t z = 0; z < full; ++z) {
    if (fa[z] != 0) {
      bits[z / 64] |= uint64_t{1} << (z % 64);
      ++count;
    }
  }
  if (count > budget) ThrowBudget(budget);
  return FromBitmap(n, bits, count);
}

}  // namespace

PointSet SumsetPairwise(const PointSet& a, const PointSet& b,
                        std::size_t budget) {
  CheckSameAmbient(a, b, "Sumset");
  if (a.ambient() <= kDenseDim) return SumsetDense(a, b, budget);
  return SumsetHashed(a, b, budget);
}

PointSet Sumset(const PointSet& a, const PointSet& b, std::size_t budget) {
  CheckSameAmbient(a, b, "Sumset");
  const std::size_t n = a.ambient();
  if (n <= kDenseDim && !a.empty() && !b.empty()) {
    const double pairs = static_cast<double>(a.size()) * b.size();
    const double transform = 3.0 * static_cast<double>(n + 1) *
                             static_cast<double>(std::size_t{1} << n);
    if (pairs > transform) return SumsetConvolution(a, b, budget);
  }
  return SumsetPairwise(a, b, budget);
}

PointSet IteratedSumset(const PointSet& a, std::size_t k,
                        std::size_t budget) {
  if (k == 0) {
    throw Error(ErrorCode::kParameterRange, "iterated sumset needs k >= 1");
  }
  if (k == 1) return a;
  PointSet half = IteratedSumset(a, k / 2, budget);
  PointSet doubled = Sumset(half, half, budget);
  if (k % 2 == 0) return doubled;
  return Sumset(doubled, a, budget);
}

uint64_t DoublingConstant(std::size_t set_size, std::size_t sumset_size) {
  if (set_size == 0) {
    throw Error(ErrorCode::kEmptyInput, "doubling constant of an empty set");
  }
  return (sumset_size + set_size - 1) / set_size;
}

uint64_t DoublingConstant(const PointSet& a) {
  if (a.empty()) {
    throw Error(ErrorCode::kEmptyInput, "doubling constant of an empty set");
  }
  return DoublingConstant(a.size(), Sumset(a, a).size());
}

EnergyProfile AdditiveEnergy(const PointSet& a) {
  if (a.empty()) {
    throw Error(ErrorCode::kEmptyInput, "additive energy of an empty set");
  }
  EnergyProfile out;
  const std::size_t n = a.ambient();
  if (n <= kDenseDim) {
    std::vector<uint64_t> r(std::size_t{1} << n, 0);
    const std::vector<uint64_t> idx = Indices(a);
    for (uint64_t x : idx) {
      for (uint64_t y : idx) ++r[x ^ y];
    }
    for (std::size_t z = 0; z < r.size(); ++z) {
      if (r[z] == 0) continue;
      out.energy += r[z] * r[z];
      out.rep_counts.emplace_back(BitVec::FromWord(n, z), r[z]);
    }
    return out;
  }
  std::unordered_map<BitVec, uint64_t, BitVecHash> r;
  BitVec z;
  for (const BitVec& x : a) {
    for (const BitVec& y : a) {
      z.AssignSum(x, y);
      ++r[z];
    }
  }
  out.rep_counts.assign(r.begin(), r.end());
  std::sort(out.rep_counts.begin(), out.rep_counts.end());
  for (const auto& [point, count] : out.rep_counts) {
    out.energy += count * count;
  }
  return out;
}

uint64_t AdditiveEnergyFourier(const PointSet& a) {
  const std::size_t n = a.ambient();
  if (n > kDenseDim) {
    throw Error(ErrorCode::kCapExceeded,
                "Fourier energy needs n <= " + std::to_string(kDenseDim));
  }
  std::vector<int64_t> f(std::size_t{1} << n, 0);
  for (const BitVec& v : a) f[v.ToWord()] = 1;
  WhtInPlace(f);
  Uint128 sum = 0;
  for (int64_t c : f) {
    const auto sq = static_cast<Uint128>(c * c);
    sum += sq * sq;
  }
  return static_cast<uint64_t>(sum >> n);
}

IsoCheckResult FreimanIsoCheck(const LinearMap& pi, const PointSet& a,
                               std::size_t budget) {
  if (pi.domain_dim() != a.ambient()) {
    ThrowDimensionMismatch(pi.domain_dim(), a.ambient(), "FreimanIsoCheck");
  }
  IsoCheckResult out;
  if (a.empty()) return out;

  // Only kernel vectors inside span(A) can land in 4A.
  const Subspace w = Subspace::Span(a.elements(), a.ambient());
  const RestrictedInverse inv(pi, w);
  const Subspace& ker = inv.kernel();
  if (ker.dim() == 0) return out;

  const PointSet two_a = Sumset(a, a, budget);
  const bool kernel_route =
      ker.dim() < 63 && (uint64_t{1} << ker.dim()) <= two_a.size() &&
      ker.dim() <= kDefaultEnumerationCap;
  if (kernel_route) {
    bool found = false;
    BitVec probe;
    ker.ForEachInCoset(BitVec(a.ambient()), [&](const BitVec& k) {
      if (found || k.IsZero()) return;
      for (const BitVec& s : two_a) {
        probe.AssignSum(k, s);
        if (two_a.Contains(probe)) {
          found = true;
          out.witness = k;
          return;
        }
      }
    });
    out.isomorphic = !found;
    return out;
  }

  const PointSet four_a = Sumset(two_a, two_a, budget);
  for (const BitVec& x : four_a) {
    if (!x.IsZero() && ker.Contains(x)) {
      out.isomorphic = false;
      out.witness = x;
      break;
    }
  }
  return out;
}

bool FreimanIsoCheckExhaustive(const LinearMap& pi, const PointSet& a,
                               std::size_t cap) {
  if (a.size() > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "quadruple check allows at most " + std::to_string(cap) +
                    " points, got " + std::to_string(a.size()));
  }
  const std::size_t s = a.size();
  std::vector<BitVec> images;
  images.reserve(s);
  for (const BitVec& x : a) images.push_back(pi.Apply(x));
  std::vector<BitVec> sums;
  std::vector<BitVec> image_sums;
  sums.reserve(s * s);
  image_sums.reserve(s * s);
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      sums.push_back(a[i] + a[j]);
      image_sums.push_back(images[i] + images[j]);
    }
  }
  for (std::size_t p = 0; p < sums.size(); ++p) {
    for (std::size_t q = p + 1; q < sums.size(); ++q) {
      if ((sums[p] == sums[q]) != (image_sums[p] == image_sums[q])) {
        return false;
      }
    }
  }
  return true;
}

RuzsaCoverResult RuzsaCover(const PointSet& s, const PointSet& t) {
  CheckSameAmbient(s, t, "RuzsaCover");
  if (s.empty()) {
    throw Error(ErrorCode::kEmptyInput, "covering by an empty set");
  }
  const std::size_t n = s.ambient();
  RuzsaCoverResult out{PointSet(n), false};
  PointSet covered(n);  // union of x + S over the chosen x
  BitVec probe;
  for (const BitVec& cand : t.Sorted()) {
    bool disjoint = true;
    for (const BitVec& e : s) {
      probe.AssignSum(cand, e);
      if (covered.Contains(probe)) {
        disjoint = false;
        break;
      }
    }
    if (!disjoint) continue;
    out.x.Insert(cand);
    for (const BitVec& e : s) covered.Insert(cand + e);
  }

  const PointSet two_s = Sumset(s, s);
  out.verified = true;
  for (const BitVec& cand : t) {
    bool hit = false;
    for (const BitVec& x : out.x) {
      probe.AssignSum(cand, x);
      if (two_s.Contains(probe)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      out.verified = false;
      break;
    }
  }
  return out;
}

CoverCertificate VerifyCover(const PointSet& a, const Subspace& v,
                             std::vector<BitVec> reps) {
  if (v.ambient() != a.ambient()) {
    ThrowDimensionMismatch(a.ambient(), v.ambient(), "VerifyCover");
  }
  std::unordered_set<BitVec, BitVecHash> cosets;
  for (const BitVec& r : reps) {
    if (r.dim() != a.ambient()) {
      ThrowDimensionMismatch(a.ambient(), r.dim(), "VerifyCover");
    }
    cosets.insert(v.Reduce(r));
  }
  CoverCertificate out;
  out.subspace = v;
  out.cover_size = reps.size();
  out.reps = std::move(reps);
  out.covered = std::all_of(a.begin(), a.end(), [&](const BitVec& x) {
    return cosets.count(v.Reduce(x)) != 0;
  });
  return out;
}

bool SpanBoundHolds(std::size_t span_dim, uint64_t k, std::size_t set_size) {
  // Compare 2^span_dim * 2K with 2^{2K} * |A| after cancelling the smaller
  // power of two; every product below fits in 128 bits.
  const Uint128 two_k = static_cast<Uint128>(k) * 2;
  const Uint128 size = set_size;
  if (two_k <= span_dim) {
    const std::size_t shift = span_dim - static_cast<std::size_t>(two_k);
    if (shift >= 64) return false;
    return (two_k << shift) <= size;
  }
  const Uint128 shift = two_k - span_dim;
  if (shift >= 64) return true;
  return two_k <= (size << static_cast<unsigned>(shift));
}

SanityReport SanityBounds(const PointSet& a, uint64_t k, std::size_t budget) {
  if (a.empty()) {
    throw Error(ErrorCode::kEmptyInput, "sanity bounds of an empty set");
  }
  if (k == 0) {
    throw Error(ErrorCode::kParameterRange, "doubling bound must be >= 1");
  }
  SanityReport r;
  r.k = k;
  r.set_size = a.size();
  const PointSet two_a = Sumset(a, a, budget);
  r.sumset_size = two_a.size();
  r.quad_sum_size = Sumset(two_a, two_a, budget).size();
  r.span_dim = Subspace::Span(a.elements(), a.ambient()).dim();
  r.energy = AdditiveEnergy(a).energy;

  const Uint128 size = r.set_size;
  const Uint128 k2 = static_cast<Uint128>(k) * k;
  r.plunnecke = static_cast<Uint128>(r.quad_sum_size) <= k2 * k2 * size;
  r.span_bound = SpanBoundHolds(r.span_dim, k, r.set_size);
  r.energy_lower =
      size * size * size * size <= static_cast<Uint128>(r.energy) * r.sumset_size;
  r.energy_upper = static_cast<Uint128>(r.energy) <= size * size * size;
  return r;
}

}  // namespace pfrlab
