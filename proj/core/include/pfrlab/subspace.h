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

#ifndef PFRLAB_SUBSPACE_H_
#define PFRLAB_SUBSPACE_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"
#include "pfrlab/error.h"

namespace pfrlab {

// Enumeration of 2^dim elements is refused above this dimension unless the
// caller passes a larger cap explicitly.
inline constexpr std::size_t kDefaultEnumerationCap = 20;

// A linear subspace of F_2^n held as a reduced row-echelon basis. The pivot of
// a row is its highest set coordinate; rows are kept in strictly decreasing
// pivot order and no row has a bit set at another row's pivot. This form is
// canonical: equal subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

  // Throws kDimensionMismatch if any vector has dimension != ambient.
  static Subspace Span(std::span<const BitVec> vectors, std::size_t ambient);
  static Subspace Full(std::size_t n);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<BitVec>& basis() const { return basis_; }
  std::vector<int> Pivots() const;

  // Adds v to the span. Returns true if the dimension grew.
  bool Insert(const BitVec& v);

  // The canonical representative of the coset v + this subspace: v with every
  // pivot coordinate cleared. Zero iff v is a member.
  BitVec Reduce(const BitVec& v) const;
  bool Contains(const BitVec& v) const { return Reduce(v).IsZero(); }

  // Keeps the first k basis rows (highest pivots); drops the trailing ones.
  Subspace Truncated(std::size_t k) const;

  // All 2^dim members in Gray-code order starting at zero. Throws
  // kCapExceeded if dim > cap.
  std::vector<BitVec> Enumerate(std::size_t cap = kDefaultEnumerationCap) const;

  // Calls fn(member) for every member of offset + this subspace, in Gray-code
  // order. Throws kCapExceeded if dim > cap.
  template <typename Fn>
  void ForEachInCoset(const BitVec& offset, Fn&& fn,
                      std::size_t cap = kDefaultEnumerationCap) const {
    CheckCap(cap);
    BitVec cur = offset;
    fn(static_cast<const BitVec&>(cur));
    const std::size_t total = std::size_t{1} << dim();
    for (std::size_t i = 1; i < total; ++i) {
      cur += basis_[static_cast<std::size_t>(__builtin_ctzll(i))];
      fn(static_cast<const BitVec&>(cur));
    }
  }

  bool IsSubspaceOf(const Subspace& other) const;
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  void CheckCap(std::size_t cap) const;

  std::size_t ambient_;
  std::vector<BitVec> basis_;
};

// Reduced echelon form over key vectors where each row carries a payload that
// is updated by the same row operations. Maintains the invariant
// payload(row) = L(key(row)) for whatever linear L produced the inserted
// (key, payload) pairs.
class AugmentedEchelon {
 public:
  struct Row {
    BitVec key;
    BitVec payload;
    int pivot;
  };

  AugmentedEchelon(std::size_t key_dim, std::size_t payload_dim)
      : key_dim_(key_dim), payload_dim_(payload_dim) {}

  // Reduces (key, payload) against the rows. Returns the key remainder and the
  // payload accumulated along the way.
  std::pair<BitVec, BitVec> Reduce(BitVec key, BitVec payload) const;

  // Inserts the pair. Returns true if the key was independent; otherwise
  // returns false and, if `dependency` is non-null, stores the reduced payload
  // (payload + sum of the combined rows' payloads).
  bool Insert(const BitVec& key, const BitVec& payload,
              BitVec* dependency = nullptr);

  std::size_t rank() const { return rows_.size(); }
  std::size_t key_dim() const { return key_dim_; }
  std::size_t payload_dim() const { return payload_dim_; }
  const std::vector<Row>& rows() const { return rows_; }

 private:
  std::size_t key_dim_;
  std::size_t payload_dim_;
  std::vector<Row> rows_;
};

std::size_t Rank(const BitMat& m);
// {x : M x = 0} as a subspace of F_2^cols.
Subspace KernelBasis(const BitMat& m);
// Column space {M x} as a subspace of F_2^rows.
Subspace ImageBasis(const BitMat& m);

}  // namespace pfrlab

#endif  // PFRLAB_SUBSPACE_H_
