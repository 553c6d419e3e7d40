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

#ifndef PFRLAB_HOMO_H_
#define PFRLAB_HOMO_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/func_table.h"
#include "pfrlab/pfr.h"
#include "pfrlab/point_set.h"
#include "pfrlab/rng.h"

namespace pfrlab {

inline constexpr std::size_t kQuadrupleExactCap = 10;
inline constexpr std::size_t kDeltaImageCap = 11;

struct Agreement {
  uint64_t hits = 0;
  uint64_t trials = 0;
  double value() const {
    return trials == 0 ? 0.0
                       : static_cast<double>(hits) / static_cast<double>(trials);
  }
};

// Pr[f(x1)+f(x2) = f(x3)+f(x4)] over x1, x2, x3 uniform and x4 = x1+x2+x3,
// by enumerating all 2^{3m} triples. Throws kCapExceeded if m > cap.
Agreement QuadrupleAgreementExact(const FuncTable& f,
                                  std::size_t cap = kQuadrupleExactCap);
// The same probability estimated from independent triples. samples = 0 picks
// the Hoeffding count for +-0.01 at 99% confidence.
Agreement QuadrupleAgreementSampled(const FuncTable& f, std::size_t samples,
                                    Rng& rng);

// Fit configuration suited to total functions: extra random directions and
// deferred ties, so that coordinates carrying the non-linear part do not
// stall the fit.
HomFitConfig DefaultFunctionFitConfig(std::size_t n);

// Affine (M, v) with many x satisfying f(x) = M x + v; the agreement is an
// exact count over F_2^m.
HomFitResult HomTestFit(FuncTable& f, const HomFitConfig& config, Rng& rng);

// {f(x) + f(y) + f(x+y) : x, y}, sorted. Throws kCapExceeded if m > cap.
PointSet DeltaImage(const FuncTable& f, std::size_t cap = kDeltaImageCap);

struct ApproxHomResult {
  BitMat m;
  BitVec v;
  uint64_t agreement = 0;
  // The distinct values of f(x) + M x, sorted.
  std::vector<BitVec> residual_image;
  std::size_t residual_image_size = 0;
  // Present when m <= kDeltaImageCap.
  std::optional<std::size_t> delta_size;
  // |X| for the greedy cover of F_2^m by translates of E + E, where
  // E = {x : f(x) = M x + v}.
  std::size_t cover_size = 0;
  bool cover_verified = false;
  // |X| * |Delta f|^2 when delta_size is known.
  std::optional<uint64_t> image_bound;
  bool bound_holds = false;
};

// Splits f = g + h with g(x) = M x linear and reports the exact size of the
// residual image {h(x)} alongside the covering bound |X| |Delta f|^2.
ApproxHomResult ApproxHomDecompose(FuncTable& f, const HomFitConfig& config,
                                   Rng& rng);

}  // namespace pfrlab

#endif  // PFRLAB_HOMO_H_
