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

#ifndef PFRLAB_WHT_H_
#define PFRLAB_WHT_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "pfrlab/wide.h"

namespace pfrlab {

// Unnormalized Walsh-Hadamard butterfly: values[z] <- sum_x values[x] (-1)^{z.x}
// where z.x is the parity of (z & x). Exact in integers; applying it twice
// multiplies by the table length. Throws kParameterRange unless the length is
// a power of two.
void WhtInPlace(std::span<int64_t> values);

// Fourier coefficients of h: F_2^d -> Z, kept as numerators over 2^d:
// coefficient(z) = E_x h(x) (-1)^{z.x} = numerator(z) / 2^d.
class Spectrum {
 public:
  Spectrum(std::size_t d, std::vector<int64_t> numerators)
      : d_(d), numerators_(std::move(numerators)) {}

  std::size_t dim() const { return d_; }
  std::size_t size() const { return numerators_.size(); }
  int64_t numerator(uint64_t z) const { return numerators_[z]; }
  uint64_t denominator() const { return uint64_t{1} << d_; }
  double coefficient(uint64_t z) const {
    return static_cast<double>(numerators_[z]) /
           static_cast<double>(denominator());
  }
  std::span<const int64_t> numerators() const { return numerators_; }

  // sum_z numerator(z)^2; Parseval says this equals 2^d sum_x h(x)^2.
  Uint128 SumOfSquares() const;

 private:
  std::size_t d_;
  std::vector<int64_t> numerators_;
};

Spectrum Wht(std::span<const int64_t> values);

}  // namespace pfrlab

#endif  // PFRLAB_WHT_H_
