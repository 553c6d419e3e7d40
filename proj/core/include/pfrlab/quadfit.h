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

#ifndef PFRLAB_QUADFIT_H_
#define PFRLAB_QUADFIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pfrlab/access.h"
#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/error.h"
#include "pfrlab/quadpoly.h"
#include "pfrlab/rng.h"
#include "pfrlab/subspace.h"

namespace pfrlab {

// Largest domain dimension the correlation target will tabulate.
inline constexpr std::size_t kMaxTargetDim = 22;

// g(x, y) = 1_S(x) (-1)^{f(x).y} for a partial function f with domain S.
//
// x ranges over coordinates of a support subspace W of F_2^m that contains
// S: coordinate vector c stands for the point sum_k c_k w_k, where w_k are
// W's echelon basis rows. Without a support subspace W = F_2^m and the
// coordinates are the points themselves. Values of f are cached, so each
// point is queried at most once.
class CorrelationTarget {
 public:
  explicit CorrelationTarget(PartialFunction& f);
  // Throws kDimensionMismatch if support does not live in F_2^m.
  CorrelationTarget(PartialFunction& f, Subspace support);

  // Dimension of the coordinate space (dim W).
  std::size_t m() const { return support_.dim(); }
  std::size_t n() const { return f_.codomain_dim(); }
  std::size_t ambient_dim() const { return support_.ambient(); }

  // The point of F_2^m with coordinates c.
  BitVec Embed(uint64_t c) const;
  // The dim W x ambient matrix C reading coordinates off a point of W, so
  // that C Embed(c) = c.
  BitMat CoordinateMap() const;

  // f at the point with coordinates c; nullopt outside S. Throws
  // kCapExceeded if m() > kMaxTargetDim.
  const std::optional<BitVec>& Graph(uint64_t c);
  int Eval(uint64_t c, const BitVec& y);

  // Full table of g over F_2^{m+n}, entry index c | (y << m).
  std::vector<int8_t> Table();

 private:
  PartialFunction& f_;
  Subspace support_;
  std::vector<uint64_t> pivot_masks_;
  std::vector<char> known_;
  std::vector<std::optional<BitVec>> cache_;
};

struct QuadFitResult {
  QuadPoly q;
  // Correlation E_z g(z) (-1)^{q(z)} = numerator / 2^log2_denominator.
  int64_t numerator = 0;
  std::size_t log2_denominator = 0;

  double correlation() const;
};

inline constexpr std::size_t kExhaustiveFitCap = 7;

// The quadratic q maximizing |E_z g(z) (-1)^{q(z)}| over F_2^d, with a
// nonnegative correlation (the constant absorbs the sign). Among maximizers
// the numerically smallest (form, linear) is returned. `g` holds 2^d values in
// {-1, 0, 1}. Throws kCapExceeded if d > cap and kParameterRange on a
// malformed table.
QuadFitResult ExhaustiveQuadFit(std::span<const int8_t> g, std::size_t d,
                                std::size_t cap = kExhaustiveFitCap);

enum class TiePolicy {
  // A direction whose best frequency class is not clear of the runner-up by
  // the tolerance aborts the fit with AmbiguityError when it is needed.
  kReject,
  // Unresolved directions are used only after every resolved one and take
  // their top class.
  kDeferUnresolved,
};

struct BilinearFitConfig {
  // Random y-directions probed in addition to the n unit vectors.
  std::size_t extra_directions = 0;
  TiePolicy ties = TiePolicy::kReject;
};

struct BilinearFitResult {
  QuadPoly q;  // y . (M x) + v . y in coordinates
  BitMat m;    // n x target.m()
  BitVec v;
  // Exact correlation of q against g: #{c : c in S, f(c) = M c + v} / 2^m.
  uint64_t agreement = 0;
  std::size_t log2_denominator = 0;
  // Directions used in the basis whose top class was not separated.
  std::size_t unresolved_used = 0;

  double correlation() const;
};

class AmbiguityError : public Error {
 public:
  AmbiguityError(BitVec direction, BitVec first, BitVec second,
                 int64_t first_numerator, int64_t second_numerator);

  const BitVec& direction() const { return direction_; }
  const BitVec& first() const { return first_; }
  const BitVec& second() const { return second_; }
  int64_t first_numerator() const { return first_numerator_; }
  int64_t second_numerator() const { return second_numerator_; }

 private:
  BitVec direction_;
  BitVec first_;
  BitVec second_;
  int64_t first_numerator_;
  int64_t second_numerator_;
};

// Fits q(x, y) = y . (M x) + v . y to g one output direction at a time: for
// each direction y the slice x -> g(x, y) is tabulated and its heaviest
// Fourier coefficient gives M^T y and v . y. Frequencies that agree on the
// affine hull of S are interchangeable and compared as one class. M is then
// assembled from a heaviest-first basis of directions. Throws AmbiguityError
// (retriable) under TiePolicy::kReject.
BilinearFitResult BilinearQuadFit(CorrelationTarget& target,
                                  const BilinearFitConfig& config, Rng& rng);

}  // namespace pfrlab

#endif  // PFRLAB_QUADFIT_H_
