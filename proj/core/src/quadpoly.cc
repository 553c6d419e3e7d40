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

#include "pfrlab/quadpoly.h"

#include <utility>

#include "pfrlab/error.h"

namespace pfrlab {

QuadPoly::QuadPoly(BitMat form, BitVec linear, bool constant)
    : form_(std::move(form)), linear_(std::move(linear)), constant_(constant) {
  const std::size_t d = linear_.dim();
  if (form_.rows() != d) ThrowDimensionMismatch(d, form_.rows(), "QuadPoly");
  if (form_.cols() != d) ThrowDimensionMismatch(d, form_.cols(), "QuadPoly");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      if (form_.Get(i, j)) {
        throw Error(ErrorCode::kParameterRange,
                    "quadratic form must be strictly upper triangular");
      }
    }
  }
}

QuadPoly QuadPoly::Bilinear(const BitMat& m, const BitVec& v) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  if (v.dim() != rows) ThrowDimensionMismatch(rows, v.dim(), "Bilinear");
  QuadPoly q(cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      // y_i M[i][j] x_j, with x_j at coordinate j < cols + i.
      if (m.Get(i, j)) q.form_.Set(j, cols + i, true);
    }
    if (v.Get(i)) q.linear_.Set(cols + i, true);
  }
  return q;
}

void QuadPoly::SetForm(std::size_t i, std::size_t j, bool value) {
  if (i >= j || j >= dim()) {
    throw Error(ErrorCode::kParameterRange,
                "form entries need i < j < d");
  }
  form_.Set(i, j, value);
}

BitMat QuadToBilinear(const QuadPoly& q, std::size_t m, std::size_t n) {
  if (q.dim() != m + n) ThrowDimensionMismatch(m + n, q.dim(), "QuadToBilinear");
  // Cross terms x_j y_i sit in the upper block (row j, column m+i); the lower
  // block of a strictly upper form is empty, so M = A12^T.
  BitMat out(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (q.form().Get(j, m + i)) out.Set(i, j, true);
    }
  }
  return out;
}

}  // namespace pfrlab
