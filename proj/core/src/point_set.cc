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

#include "pfrlab/point_set.h"

#include <algorithm>

#include "pfrlab/error.h"
#include "pfrlab/rng.h"

namespace pfrlab {

PointSet::PointSet(std::size_t ambient) : n_(ambient) {
  if (dense()) bitmap_.assign(((std::size_t{1} << n_) + 63) / 64, 0);
}

PointSet PointSet::FromVectors(std::size_t ambient,
                               std::vector<BitVec> points) {
  PointSet s(ambient);
  s.Reserve(points.size());
  for (auto& p : points) s.Insert(p);
  return s;
}

bool PointSet::Insert(const BitVec& v) {
  if (v.dim() != n_) ThrowDimensionMismatch(n_, v.dim(), "PointSet::Insert");
  if (dense()) {
    const uint64_t idx = v.ToWord();
    uint64_t& word = bitmap_[idx / 64];
    const uint64_t mask = uint64_t{1} << (idx % 64);
    if (word & mask) return false;
    word |= mask;
  } else if (!hashed_.insert(v).second) {
    return false;
  }
  elements_.push_back(v);
  return true;
}

bool PointSet::Contains(const BitVec& v) const {
  if (v.dim() != n_) ThrowDimensionMismatch(n_, v.dim(), "PointSet::Contains");
  if (dense()) {
    const uint64_t idx = v.ToWord();
    return (bitmap_[idx / 64] >> (idx % 64)) & 1U;
  }
  return hashed_.count(v) != 0;
}

const BitVec& PointSet::Sample(Rng& rng) const {
  if (elements_.empty()) {
    throw Error(ErrorCode::kEmptyInput, "cannot sample from an empty set");
  }
  return elements_[rng.Below(elements_.size())];
}

PointSet PointSet::Sorted() const {
  std::vector<BitVec> v = elements_;
  std::sort(v.begin(), v.end());
  return FromVectors(n_, std::move(v));
}

bool PointSet::SameElements(const PointSet& other) const {
  if (other.n_ != n_ || other.size() != size()) return false;
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const BitVec& v) { return other.Contains(v); });
}

}  // namespace pfrlab
