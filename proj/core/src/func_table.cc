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

#include "pfrlab/func_table.h"

#include <string>
#include <utility>

#include "pfrlab/error.h"

namespace pfrlab {
namespace {

void CheckTableDim(std::size_t m) {
  if (m > kMaxTableDim) {
    throw Error(ErrorCode::kParameterRange,
                "function tables allow m <= " + std::to_string(kMaxTableDim) +
                    ", got " + std::to_string(m));
  }
}

}  // namespace

FuncTable::FuncTable(std::size_t m, std::size_t n) : m_(m), n_(n) {
  CheckTableDim(m);
  values_.assign(std::size_t{1} << m, BitVec(n));
}

FuncTable::FuncTable(std::size_t m, std::size_t n, std::vector<BitVec> values)
    : m_(m), n_(n), values_(std::move(values)) {
  CheckTableDim(m);
  if (values_.size() != (std::size_t{1} << m)) {
    throw Error(ErrorCode::kParameterRange,
                "table for m = " + std::to_string(m) + " needs " +
                    std::to_string(std::size_t{1} << m) + " values, got " +
                    std::to_string(values_.size()));
  }
  for (const BitVec& v : values_) {
    if (v.dim() != n) ThrowDimensionMismatch(n, v.dim(), "FuncTable");
  }
}

void FuncTable::set(uint64_t index, BitVec value) {
  if (value.dim() != n_) ThrowDimensionMismatch(n_, value.dim(), "FuncTable");
  values_[index] = std::move(value);
}

}  // namespace pfrlab
