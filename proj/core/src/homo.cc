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

#include "pfrlab/homo.h"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <utility>

#include "pfrlab/error.h"
#include "pfrlab/setops.h"

namespace pfrlab {
namespace {

void CheckCap(std::size_t m, std::size_t cap, const char* what) {
  if (m > cap) {
    throw Error(ErrorCode::kCapExceeded,
                std::string(what) + " allows m <= " + std::to_string(cap) +
                    ", got " + std::to_string(m));
  }
}

// Packs values into words when n <= 64 so the inner loops avoid allocation.
bool PackValues(const FuncTable& f, std::vector<uint64_t>& out) {
  if (f.codomain_dim() > 64) return false;
  out.resize(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f.at(i).ToWord();
  return true;
}

}  // namespace

Agreement QuadrupleAgreementExact(const FuncTable& f, std::size_t cap) {
  const std::size_t m = f.domain_dim();
  CheckCap(m, cap, "exact quadruple agreement");
  const uint64_t size = uint64_t{1} << m;
  Agreement out;
  out.trials = size * size * size;
  std::vector<uint64_t> w;
  if (PackValues(f, w)) {
    for (uint64_t x1 = 0; x1 < size; ++x1) {
      for (uint64_t x2 = 0; x2 < size; ++x2) {
        const uint64_t lhs = w[x1] ^ w[x2];
        const uint64_t s = x1 ^ x2;
        for (uint64_t x3 = 0; x3 < size; ++x3) {
          out.hits += (lhs == (w[x3] ^ w[s ^ x3]));
        }
      }
    }
    return out;
  }
  BitVec lhs;
  BitVec rhs;
  for (uint64_t x1 = 0; x1 < size; ++x1) {
    for (uint64_t x2 = 0; x2 < size; ++x2) {
      lhs.AssignSum(f.at(x1), f.at(x2));
      for (uint64_t x3 = 0; x3 < size; ++x3) {
        rhs.AssignSum(f.at(x3), f.at(x1 ^ x2 ^ x3));
        out.hits += (lhs == rhs);
      }
    }
  }
  return out;
}

Agreement QuadrupleAgreementSampled(const FuncTable& f, std::size_t samples,
                                    Rng& rng) {
  if (samples == 0) samples = HoeffdingSampleCount(0.01, 0.99, 1);
  const uint64_t size = f.size();
  Agreement out;
  out.trials = samples;
  BitVec lhs;
  BitVec rhs;
  for (std::size_t i = 0; i < samples; ++i) {
    const uint64_t x1 = rng.Below(size);
    const uint64_t x2 = rng.Below(size);
    const uint64_t x3 = rng.Below(size);
    lhs.AssignSum(f.at(x1), f.at(x2));
    rhs.AssignSum(f.at(x3), f.at(x1 ^ x2 ^ x3));
    out.hits += (lhs == rhs);
  }
  return out;
}

HomFitConfig DefaultFunctionFitConfig(std::size_t n) {
  HomFitConfig config;
  config.bilinear.extra_directions = 2 * n + 8;
  config.bilinear.ties = TiePolicy::kDeferUnresolved;
  return config;
}

HomFitResult HomTestFit(FuncTable& f, const HomFitConfig& config, Rng& rng) {
  return RestrictedHomFit(f, config, rng);
}

PointSet DeltaImage(const FuncTable& f, std::size_t cap) {
  const std::size_t m = f.domain_dim();
  const std::size_t n = f.codomain_dim();
  CheckCap(m, cap, "coboundary image");
  const uint64_t size = uint64_t{1} << m;
  std::vector<uint64_t> w;
  if (PackValues(f, w)) {
    std::unordered_set<uint64_t> seen;
    for (uint64_t x = 0; x < size; ++x) {
      for (uint64_t y = x; y < size; ++y) seen.insert(w[x] ^ w[y] ^ w[x ^ y]);
    }
    std::vector<uint64_t> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end());
    PointSet out(n);
    for (uint64_t s : sorted) out.Insert(BitVec::FromWord(n, s));
    return out;
  }
  std::unordered_set<BitVec, BitVecHash> seen;
  for (uint64_t x = 0; x < size; ++x) {
    for (uint64_t y = x; y < size; ++y) {
      seen.insert(f.at(x) + f.at(y) + f.at(x ^ y));
    }
  }
  std::vector<BitVec> sorted(seen.begin(), seen.end());
  std::sort(sorted.begin(), sorted.end());
  return PointSet::FromVectors(n, std::move(sorted));
}

ApproxHomResult ApproxHomDecompose(FuncTable& f, const HomFitConfig& config,
                                   Rng& rng) {
  const std::size_t m = f.domain_dim();
  HomFitResult fit = HomTestFit(f, config, rng);
  ApproxHomResult out;
  out.agreement = fit.agreement;

  std::unordered_set<BitVec, BitVecHash> residual;
  PointSet agree(m);
  for (uint64_t i = 0; i < f.size(); ++i) {
    const BitVec x = BitVec::FromWord(m, i);
    BitVec h = f.at(i) + fit.m.Apply(x);
    if (h == fit.v) agree.Insert(x);
    residual.insert(std::move(h));
  }
  out.residual_image.assign(residual.begin(), residual.end());
  std::sort(out.residual_image.begin(), out.residual_image.end());
  out.residual_image_size = out.residual_image.size();

  if (!agree.empty() && m <= PointSet::kDenseMaxDim) {
    PointSet everything(m);
    everything.Reserve(f.size());
    for (uint64_t i = 0; i < f.size(); ++i) {
      everything.Insert(BitVec::FromWord(m, i));
    }
    const RuzsaCoverResult cover = RuzsaCover(agree, everything);
    out.cover_size = cover.x.size();
    out.cover_verified = cover.verified;
  }
  if (m <= kDeltaImageCap) {
    const uint64_t delta = DeltaImage(f).size();
    out.delta_size = delta;
    if (out.cover_size > 0) {
      out.image_bound = out.cover_size * delta * delta;
      out.bound_holds = out.cover_verified &&
                        out.residual_image_size <= *out.image_bound;
    }
  }
  out.m = std::move(fit.m);
  out.v = std::move(fit.v);
  return out;
}

}  // namespace pfrlab
