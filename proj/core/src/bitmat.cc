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

#include "pfrlab/bitmat.h"

#include <utility>

#include "pfrlab/error.h"
#include "pfrlab/rng.h"

namespace pfrlab {

BitMat BitMat::Identity(std::size_t n) {
  BitMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.Set(i, i, true);
  return m;
}

BitMat BitMat::Random(std::size_t rows, std::size_t cols, Rng& rng) {
  BitMat m(rows, cols);
  for (auto& r : m.rows_) r = BitVec::Random(cols, rng);
  return m;
}

BitMat BitMat::FromRows(std::size_t cols, std::vector<BitVec> rows) {
  for (const auto& r : rows) {
    if (r.dim() != cols) ThrowDimensionMismatch(cols, r.dim(), "BitMat rows");
  }
  BitMat m;
  m.cols_ = cols;
  m.rows_ = std::move(rows);
  return m;
}

BitMat BitMat::FromColumns(std::size_t rows,
                           std::span<const BitVec> columns) {
  BitMat m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) {
      ThrowDimensionMismatch(rows, columns[c].dim(), "BitMat columns");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (columns[c].Get(r)) m.Set(r, c, true);
    }
  }
  return m;
}

BitVec BitMat::Column(std::size_t c) const {
  BitVec v(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].Get(c)) v.Set(r, true);
  }
  return v;
}

BitVec BitMat::Apply(const BitVec& x) const {
  if (x.dim() != cols_) ThrowDimensionMismatch(cols_, x.dim(), "BitMat::Apply");
  BitVec y(rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    if (rows_[r].Dot(x)) y.Set(r, true);
  }
  return y;
}

BitMat BitMat::Transpose() const {
  BitMat t(cols_, rows());
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (rows_[r].Get(c)) t.Set(c, r, true);
    }
  }
  return t;
}

bool BitMat::IsZero() const {
  for (const auto& r : rows_) {
    if (!r.IsZero()) return false;
  }
  return true;
}

BitMat BitMat::operator*(const BitMat& rhs) const {
  if (rhs.rows() != cols_) {
    ThrowDimensionMismatch(cols_, rhs.rows(), "BitMat product");
  }
  BitMat out(rows(), rhs.cols());
  for (std::size_t r = 0; r < rows(); ++r) {
    BitVec acc(rhs.cols());
    for (std::size_t k = 0; k < cols_; ++k) {
      if (rows_[r].Get(k)) acc += rhs.rows_[k];
    }
    out.rows_[r] = std::move(acc);
  }
  return out;
}

BitMat& BitMat::operator+=(const BitMat& rhs) {
  if (rhs.rows() != rows() || rhs.cols_ != cols_) {
    throw Error(ErrorCode::kDimensionMismatch, "BitMat sum shape mismatch");
  }
  for (std::size_t r = 0; r < rows(); ++r) rows_[r] += rhs.rows_[r];
  return *this;
}

}  // namespace pfrlab
