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

#include "pfrlab/linear_map.h"

#include "pfrlab/error.h"

namespace pfrlab {

AffineMap::AffineMap(BitMat linear, BitVec offset)
    : linear_(std::move(linear)), offset_(std::move(offset)) {
  if (offset_.dim() != linear_.rows()) {
    ThrowDimensionMismatch(linear_.rows(), offset_.dim(), "AffineMap offset");
  }
}

LinearMap RandomLinearMap(const Subspace& u, std::size_t m, Rng& rng) {
  if (m == 0) {
    throw Error(ErrorCode::kParameterRange,
                "random linear map needs codomain dimension >= 1");
  }
  BitMat matrix(m, u.ambient());
  for (const auto& b : u.basis()) {
    const auto pivot = static_cast<std::size_t>(b.HighestBit());
    const BitVec image = BitVec::Random(m, rng);
    for (std::size_t r = 0; r < m; ++r) {
      if (image.Get(r)) matrix.Set(r, pivot, true);
    }
  }
  return LinearMap(std::move(matrix));
}

RestrictedInverse::RestrictedInverse(const LinearMap& pi, const Subspace& u)
    : codomain_dim_(pi.codomain_dim()),
      domain_dim_(pi.domain_dim()),
      echelon_(pi.codomain_dim(), pi.domain_dim()),
      kernel_(pi.domain_dim()),
      image_(pi.codomain_dim()) {
  if (u.ambient() != pi.domain_dim()) {
    ThrowDimensionMismatch(pi.domain_dim(), u.ambient(), "restricted inverse");
  }
  for (const auto& b : u.basis()) {
    BitVec dependency;
    if (!echelon_.Insert(pi.Apply(b), b, &dependency)) {
      kernel_.Insert(dependency);
    }
  }
  for (const auto& row : echelon_.rows()) image_.Insert(row.key);
}

std::optional<BitVec> RestrictedInverse::Preimage(const BitVec& x) const {
  if (x.dim() != codomain_dim_) {
    ThrowDimensionMismatch(codomain_dim_, x.dim(), "preimage");
  }
  auto [rem, u] = echelon_.Reduce(x, BitVec(domain_dim_));
  if (!rem.IsZero()) return std::nullopt;
  return u;
}

}  // namespace pfrlab
