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

#include "pfrlab/subspace.h"

#include <algorithm>
#include <string>

namespace pfrlab {

Subspace Subspace::Span(std::span<const BitVec> vectors, std::size_t ambient) {
  Subspace s(ambient);
  for (const auto& v : vectors) {
    if (v.dim() != ambient) ThrowDimensionMismatch(ambient, v.dim(), "span");
    s.Insert(v);
  }
  return s;
}

Subspace Subspace::Full(std::size_t n) {
  Subspace s(n);
  for (std::size_t i = n; i-- > 0;) s.basis_.push_back(BitVec::Unit(n, i));
  return s;
}

std::vector<int> Subspace::Pivots() const {
  std::vector<int> p;
  p.reserve(basis_.size());
  for (const auto& b : basis_) p.push_back(b.HighestBit());
  return p;
}

BitVec Subspace::Reduce(const BitVec& v) const {
  if (v.dim() != ambient_) ThrowDimensionMismatch(ambient_, v.dim(), "reduce");
  BitVec r = v;
  for (const auto& b : basis_) {
    if (r.Get(static_cast<std::size_t>(b.HighestBit()))) r += b;
  }
  return r;
}

bool Subspace::Insert(const BitVec& v) {
  BitVec r = Reduce(v);
  const int p = r.HighestBit();
  if (p < 0) return false;
  for (auto& b : basis_) {
    if (b.Get(static_cast<std::size_t>(p))) b += r;
  }
  auto pos = std::find_if(basis_.begin(), basis_.end(),
                          [p](const BitVec& b) { return b.HighestBit() < p; });
  basis_.insert(pos, std::move(r));
  return true;
}

Subspace Subspace::Truncated(std::size_t k) const {
  Subspace s(ambient_);
  s.basis_.assign(basis_.begin(),
                  basis_.begin() + static_cast<std::ptrdiff_t>(
                                       std::min(k, basis_.size())));
  return s;
}

void Subspace::CheckCap(std::size_t cap) const {
  if (dim() > cap) {
    throw Error(ErrorCode::kCapExceeded,
                "enumeration of a dimension-" + std::to_string(dim()) +
                    " subspace exceeds cap " + std::to_string(cap));
  }
}

std::vector<BitVec> Subspace::Enumerate(std::size_t cap) const {
  std::vector<BitVec> out;
  CheckCap(cap);
  out.reserve(std::size_t{1} << dim());
  ForEachInCoset(BitVec(ambient_), [&](const BitVec& v) { out.push_back(v); },
                 cap);
  return out;
}

bool Subspace::IsSubspaceOf(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const BitVec& b) { return other.Contains(b); });
}

std::pair<BitVec, BitVec> AugmentedEchelon::Reduce(BitVec key,
                                                   BitVec payload) const {
  if (key.dim() != key_dim_) ThrowDimensionMismatch(key_dim_, key.dim(), "key");
  if (payload.dim() != payload_dim_) {
    ThrowDimensionMismatch(payload_dim_, payload.dim(), "payload");
  }
  for (const auto& row : rows_) {
    if (key.Get(static_cast<std::size_t>(row.pivot))) {
      key += row.key;
      payload += row.payload;
    }
  }
  return {std::move(key), std::move(payload)};
}

bool AugmentedEchelon::Insert(const BitVec& key, const BitVec& payload,
                              BitVec* dependency) {
  auto [k, p] = Reduce(key, payload);
  const int pivot = k.HighestBit();
  if (pivot < 0) {
    if (dependency != nullptr) *dependency = std::move(p);
    return false;
  }
  for (auto& row : rows_) {
    if (row.key.Get(static_cast<std::size_t>(pivot))) {
      row.key += k;
      row.payload += p;
    }
  }
  auto pos = std::find_if(rows_.begin(), rows_.end(), [pivot](const Row& r) {
    return r.pivot < pivot;
  });
  rows_.insert(pos, Row{std::move(k), std::move(p), pivot});
  return true;
}

std::size_t Rank(const BitMat& m) {
  return Subspace::Span(m.row_vectors(), m.cols()).dim();
}

Subspace KernelBasis(const BitMat& m) {
  const Subspace rowspace = Subspace::Span(m.row_vectors(), m.cols());
  const std::vector<int> pivots = rowspace.Pivots();
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  Subspace kernel(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    // x_j = 1 and x_p = row(p)_j makes every reduced row orthogonal to x.
    BitVec x = BitVec::Unit(m.cols(), j);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (rowspace.basis()[r].Get(j)) {
        x.Set(static_cast<std::size_t>(pivots[r]), true);
      }
    }
    kernel.Insert(x);
  }
  return kernel;
}

Subspace ImageBasis(const BitMat& m) {
  Subspace image(m.rows());
  for (std::size_t c = 0; c < m.cols(); ++c) image.Insert(m.Column(c));
  return image;
}

}  // namespace pfrlab
