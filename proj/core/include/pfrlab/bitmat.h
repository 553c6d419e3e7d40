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

#ifndef PFRLAB_BITMAT_H_
#define PFRLAB_BITMAT_H_

#include <cstddef>
#include <span>
#include <vector>

#include "pfrlab/bitvec.h"

namespace pfrlab {

// Dense r x c matrix over F_2 stored as r row vectors of dimension c.
class BitMat {
 public:
  BitMat() = default;
  BitMat(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMat Identity(std::size_t n);
  static BitMat Random(std::size_t rows, std::size_t cols, Rng& rng);
  // Every row must have dimension `cols`.
  static BitMat FromRows(std::size_t cols, std::vector<BitVec> rows);
  // Matrix whose j-th column is columns[j]; all columns share dimension rows.
  static BitMat FromColumns(std::size_t rows, std::span<const BitVec> columns);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  BitVec& mutable_row(std::size_t r) { return rows_[r]; }
  std::span<const BitVec> row_vectors() const { return rows_; }

  bool Get(std::size_t r, std::size_t c) const { return rows_[r].Get(c); }
  void Set(std::size_t r, std::size_t c, bool v) { rows_[r].Set(c, v); }

  BitVec Column(std::size_t c) const;
  // M x, for x of dimension cols(); result has dimension rows().
  BitVec Apply(const BitVec& x) const;
  BitMat Transpose() const;
  bool IsZero() const;

  BitMat operator*(const BitMat& rhs) const;
  BitMat& operator+=(const BitMat& rhs);
  friend BitMat operator+(BitMat a, const BitMat& b) { return a += b; }
  friend bool operator==(const BitMat&, const BitMat&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

}  // namespace pfrlab

#endif  // PFRLAB_BITMAT_H_
