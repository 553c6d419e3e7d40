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

#ifndef PFRLAB_LINEAR_MAP_H_
#define PFRLAB_LINEAR_MAP_H_

#include <cstddef>
#include <optional>
#include <utility>

#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/rng.h"
#include "pfrlab/subspace.h"

namespace pfrlab {

// x -> M x from F_2^domain_dim to F_2^codomain_dim; M is codomain x domain.
class LinearMap {
 public:
  LinearMap() = default;
  explicit LinearMap(BitMat matrix) : matrix_(std::move(matrix)) {}

  std::size_t domain_dim() const { return matrix_.cols(); }
  std::size_t codomain_dim() const { return matrix_.rows(); }
  const BitMat& matrix() const { return matrix_; }

  BitVec Apply(const BitVec& x) const { return matrix_.Apply(x); }

 private:
  BitMat matrix_;
};

// x -> L x + offset.
class AffineMap {
 public:
  AffineMap() = default;
  AffineMap(BitMat linear, BitVec offset);

  const BitMat& linear() const { return linear_; }
  const BitVec& offset() const { return offset_; }
  std::size_t domain_dim() const { return linear_.cols(); }
  std::size_t codomain_dim() const { return linear_.rows(); }

  BitVec Apply(const BitVec& x) const { return linear_.Apply(x) + offset_; }

 private:
  BitMat linear_;
  BitVec offset_;
};

// A random linear map on F_2^n whose values on the echelon basis of U are
// independent uniform points of F_2^m, drawn in basis order. Coordinates off
// U's pivots map to zero, so the map is a function of the seed and U only.
// Throws kParameterRange if m == 0.
LinearMap RandomLinearMap(const Subspace& u, std::size_t m, Rng& rng);

// Inverse of pi restricted to U, up to ker(pi|_U).
class RestrictedInverse {
 public:
  RestrictedInverse(const LinearMap& pi, const Subspace& u);

  // ker(pi) intersected with U, as a subspace of F_2^n.
  const Subspace& kernel() const { return kernel_; }
  // pi(U) as a subspace of F_2^m.
  const Subspace& image() const { return image_; }

  // Some u in U with pi(u) = x, or nullopt if x is outside pi(U). The full
  // fiber is Preimage(x) + kernel(). Throws kDimensionMismatch if x does not
  // live in the codomain.
  std::optional<BitVec> Preimage(const BitVec& x) const;

 private:
  std::size_t codomain_dim_;
  std::size_t domain_dim_;
  AugmentedEchelon echelon_;  // key pi(u), payload u
  Subspace kernel_;
  Subspace image_;
};

}  // namespace pfrlab

#endif  // PFRLAB_LINEAR_MAP_H_
