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

#ifndef PFRLAB_POINT_SET_H_
#define PFRLAB_POINT_SET_H_

#include <cstddef>
#include <cstdint>
#include <unordered_set>
#include <vector>

#include "pfrlab/bitvec.h"

namespace pfrlab {

class Rng;

// An explicit finite subset of F_2^n. Elements keep their insertion order,
// which is what Sample and iteration use. Membership is a bitmap over F_2^n
// for n <= kDenseMaxDim and a hash set above that.
class PointSet {
 public:
  static constexpr std::size_t kDenseMaxDim = 20;

  explicit PointSet(std::size_t ambient = 0);

  // Drops duplicates, keeping first occurrences. Throws kDimensionMismatch.
  static PointSet FromVectors(std::size_t ambient, std::vector<BitVec> points);

  std::size_t ambient() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  const std::vector<BitVec>& elements() const { return elements_; }
  const BitVec& operator[](std::size_t i) const { return elements_[i]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  // Returns false (and leaves the set unchanged) if already present.
  bool Insert(const BitVec& v);
  bool Contains(const BitVec& v) const;
  // Uniform over elements. Throws kEmptyInput on an empty set.
  const BitVec& Sample(Rng& rng) const;

  // Same elements in numeric (= lexicographic string) order.
  PointSet Sorted() const;
  void Reserve(std::size_t count) { elements_.reserve(count); }

  // Same elements, regardless of order.
  bool SameElements(const PointSet& other) const;

 private:
  bool dense() const { return n_ <= kDenseMaxDim; }

  std::size_t n_;
  std::vector<BitVec> elements_;
  std::vector<uint64_t> bitmap_;
  std::unordered_set<BitVec, BitVecHash> hashed_;
};

}  // namespace pfrlab

#endif  // PFRLAB_POINT_SET_H_
