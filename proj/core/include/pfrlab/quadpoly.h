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

#ifndef PFRLAB_QUADPOLY_H_
#define PFRLAB_QUADPOLY_H_

#include <cstddef>

#include "pfrlab/bitmat.h"
#include "pfrlab/bitvec.h"

namespace pfrlab {

// q(z) = sum_{i<j} form[i][j] z_i z_j + linear . z + constant over F_2^d.
// Squares fold into the linear part (z_i^2 = z_i), so the form is kept
// strictly upper triangular.
class QuadPoly {
 public:
  explicit QuadPoly(std::size_t d = 0)
      : form_(d, d), linear_(d), constant_(false) {}

  // Throws kDimensionMismatch on inconsistent sizes and kParameterRange if
  // the form has entries on or below the diagonal.
  QuadPoly(BitMat form, BitVec linear, bool constant);

  // q(x, y) = y . (M x) + v . y on F_2^{m+n}, with x in coordinates [0, m)
  // and y in [m, m+n). M is n x m.
  static QuadPoly Bilinear(const BitMat& m, const BitVec& v);

  std::size_t dim() const { return linear_.dim(); }
  const BitMat& form() const { return form_; }
  const BitVec& linear() const { return linear_; }
  bool constant() const { return constant_; }

  void SetForm(std::size_t i, std::size_t j, bool value);
  BitVec& mutable_linear() { return linear_; }
  void set_constant(bool c) { constant_ = c; }

  bool Eval(const BitVec& z) const {
    return z.Dot(form_.Apply(z)) ^ linear_.Dot(z) ^ constant_;
  }

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  BitMat form_;
  BitVec linear_;
  bool constant_;
};

// The n x m matrix M with q(x,y) - q(x,0) - q(0,y) + q(0,0) = (M x) . y for
// the split z = (x, y), x in F_2^m and y in F_2^n. Throws kDimensionMismatch
// unless q.dim() == m + n.
BitMat QuadToBilinear(const QuadPoly& q, std::size_t m, std::size_t n);

}  // namespace pfrlab

#endif  // PFRLAB_QUADPOLY_H_
