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

#include "pfrlab/wht.h"

#include <bit>
#include <string>

#include "pfrlab/error.h"

namespace pfrlab {

void WhtInPlace(std::span<int64_t> values) {
  const std::size_t len = values.size();
  if (len == 0 || !std::has_single_bit(len)) {
    throw Error(ErrorCode::kParameterRange,
                "Walsh-Hadamard transform needs a power-of-two length, got " +
                    std::to_string(len));
  }
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const int64_t a = values[j];
        const int64_t b = values[j + h];
        values[j] = a + b;
        values[j + h] = a - b;
      }
    }
  }
}

Spectrum Wht(std::span<const int64_t> values) {
  std::vector<int64_t> out(values.begin(), values.end());
  WhtInPlace(out);
  const auto d = static_cast<std::size_t>(std::countr_zero(out.size()));
  return Spectrum(d, std::move(out));
}

Uint128 Spectrum::SumOfSquares() const {
  Uint128 s = 0;
  for (int64_t c : numerators_) {
    const auto a = static_cast<Uint128>(c < 0 ? -c : c);
    s += a * a;
  }
  return s;
}

}  // namespace pfrlab
