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

#ifndef PFRLAB_SETOPS_H_
#define PFRLAB_SETOPS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pfrlab/bitvec.h"
#include "pfrlab/linear_map.h"
#include "pfrlab/point_set.h"
#include "pfrlab/subspace.h"
#include "pfrlab/wide.h"

namespace pfrlab {

// Upper limit on the number of points any sumset may hold before
// kBudgetExceeded is raised.
inline constexpr std::size_t kDefaultSumsetBudget = std::size_t{1} << 24;

// {a + b : a in A, b in B}, sorted numerically. Picks the pairwise loop or a
// Walsh-Hadamard convolution depending on which is cheaper. Throws
// kDimensionMismatch, or kBudgetExceeded when the result (or the pair loop
// needed to build it) exceeds the budget.
PointSet Sumset(const PointSet& a, const PointSet& b,
                std::size_t budget = kDefaultSumsetBudget);
// Always the explicit pair loop. Same contract as Sumset.
PointSet SumsetPairwise(const PointSet& a, const PointSet& b,
                        std::size_t budget = kDefaultSumsetBudget);
// kA for k >= 1, built by repeated doubling so that 4A = 2(2A).
PointSet IteratedSumset(const PointSet& a, std::size_t k,
                        std::size_t budget = kDefaultSumsetBudget);

// Smallest integer K with |A + A| <= K |A|. Throws kEmptyInput.
uint64_t DoublingConstant(const PointSet& a);
// Same, given |A + A| already computed.
uint64_t DoublingConstant(std::size_t set_size, std::size_t sumset_size);

struct EnergyProfile {
  // Number of (a, b, c, d) in A^4 with a + b = c + d.
  uint64_t energy = 0;
  // r(z) = #{(a, b) in A^2 : a + b = z}, for every z with r(z) > 0, sorted
  // by z.
  std::vector<std::pair<BitVec, uint64_t>> rep_counts;
};

// Throws kEmptyInput.
EnergyProfile AdditiveEnergy(const PointSet& a);
// Energy through the fourth moment of the indicator's spectrum,
// 2^-n sum_z (hat 1_A(z))^4. Throws kCapExceeded for n > 20.
uint64_t AdditiveEnergyFourier(const PointSet& a);

struct IsoCheckResult {
  bool isomorphic = true;
  // On failure: a nonzero x in 4A with pi(x) = 0.
  std::optional<BitVec> witness;
};

// Decides whether the linear map pi is a Freiman isomorphism on A, which for
// linear maps means ker(pi) misses 4A \ {0}. Works inside span(A): if the
// kernel there is small it tests each kernel vector for membership in 2A + 2A,
// otherwise it builds 4A. Throws kBudgetExceeded if 4A is needed and too big.
IsoCheckResult FreimanIsoCheck(const LinearMap& pi, const PointSet& a,
                               std::size_t budget = kDefaultSumsetBudget);

inline constexpr std::size_t kQuadrupleCheckCap = 32;
// Direct check of a + b = c + d <=> pi(a) + pi(b) = pi(c) + pi(d) over all
// quadruples of A. Throws kCapExceeded if |A| > cap.
bool FreimanIsoCheckExhaustive(const LinearMap& pi, const PointSet& a,
                               std::size_t cap = kQuadrupleCheckCap);

struct RuzsaCoverResult {
  PointSet x;
  // T is contained in X + S + S, checked explicitly.
  bool verified = false;
};

// Greedy covering: scan T in numeric order and keep t whenever t + S misses
// every translate x + S kept so far. Throws kEmptyInput if S is empty.
RuzsaCoverResult RuzsaCover(const PointSet& s, const PointSet& t);

struct CoverCertificate {
  Subspace subspace;
  std::vector<BitVec> reps;
  bool covered = false;
  std::size_t cover_size = 0;
};

// covered is true iff every a in A lies in reps[i] + V for some i.
CoverCertificate VerifyCover(const PointSet& a, const Subspace& v,
                             std::vector<BitVec> reps);

struct SanityReport {
  uint64_t k = 0;
  std::size_t set_size = 0;
  std::size_t sumset_size = 0;    // |2A|
  std::size_t quad_sum_size = 0;  // |4A|
  std::size_t span_dim = 0;
  uint64_t energy = 0;

  bool plunnecke = false;      // |4A| <= K^4 |A|
  bool span_bound = false;     // |span A| <= 2^{2K} / (2K) |A|
  bool energy_lower = false;   // |A|^4 <= E |2A|
  bool energy_upper = false;   // E <= |A|^3

  bool AllHold() const {
    return plunnecke && span_bound && energy_lower && energy_upper;
  }
};

// Evaluates the inequalities exactly for the given K (normally
// DoublingConstant(A)). Throws kEmptyInput, or kParameterRange for K = 0.
SanityReport SanityBounds(const PointSet& a, uint64_t k,
                          std::size_t budget = kDefaultSumsetBudget);

// Exact test of 2^span_dim * 2K <= 2^{2K} * set_size.
bool SpanBoundHolds(std::size_t span_dim, uint64_t k, std::size_t set_size);

}  // namespace pfrlab

#endif  // PFRLAB_SETOPS_H_
