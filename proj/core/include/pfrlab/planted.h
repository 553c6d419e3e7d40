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

#ifndef PFRLAB_PLANTED_H_
#define PFRLAB_PLANTED_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/func_table.h"
#include "pfrlab/point_set.h"
#include "pfrlab/rng.h"
#include "pfrlab/subspace.h"

namespace pfrlab {

// Largest planted set the cover generator will materialize.
inline constexpr std::size_t kMaxPlantedPoints = std::size_t{1} << 22;

struct PlantedInstance {
  PointSet set;
  Subspace hidden_v;
  // Canonical coset representatives (reduced against hidden_v), distinct.
  std::vector<BitVec> hidden_reps;
  std::size_t n = 0;
  std::size_t dim_v = 0;
  std::size_t cosets = 0;
  double noise = 0.0;
  // Points of the union that were swapped out for noise.
  std::size_t replaced = 0;
  // Exact doubling constant of `set`.
  uint64_t doubling = 0;
};

// The union of c distinct cosets of a random dim_v-dimensional subspace of
// F_2^n, then round(noise * |A|) of its points replaced by distinct uniform
// points outside the union. Throws kParameterRange on infeasible parameters.
PlantedInstance GenPlantedCover(std::size_t n, std::size_t dim_v,
                                std::size_t cosets, double noise, Rng& rng);

struct AffineInstance {
  FuncTable f;
  BitMat m;
  BitVec v;
  double rho = 0.0;
  // Points planted to agree with x -> Mx + v; the true agreement can be
  // slightly higher by chance.
  std::size_t planted = 0;
};

// f agrees with a random affine map on ceil(rho * 2^m) random points and is
// uniform elsewhere. Throws kParameterRange unless 0 < rho <= 1.
AffineInstance GenPlantedAffine(std::size_t m, std::size_t n, double rho,
                                Rng& rng);

struct SmallImageInstance {
  FuncTable f;
  BitMat m;
  // h(x) = f(x) + Mx takes values in this subspace, |w| <= imgk.
  Subspace w;
  std::size_t imgk = 0;
};

// f(x) = Mx + h(x) with M random and h uniform over a random subspace W of
// dimension floor(log2 imgk). Every coboundary value f(x)+f(y)+f(x+y) lies
// in W, so |Delta f| <= |W| <= imgk. Throws kParameterRange if imgk == 0 or
// W would not fit in F_2^n.
SmallImageInstance GenSmallImage(std::size_t m, std::size_t n,
                                 std::size_t imgk, Rng& rng);

// A uniformly random subspace of F_2^n of the given dimension.
Subspace RandomSubspace(std::size_t n, std::size_t dim, Rng& rng);

}  // namespace pfrlab

#endif  // PFRLAB_PLANTED_H_
