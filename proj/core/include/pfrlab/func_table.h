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

#ifndef PFRLAB_FUNC_TABLE_H_
#define PFRLAB_FUNC_TABLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "pfrlab/access.h"
#include "pfrlab/bitvec.h"

namespace pfrlab {

// Largest domain dimension for an explicit table.
inline constexpr std::size_t kMaxTableDim = 24;

// A total function F_2^m -> F_2^n stored as its full value table. Entry i is
// f(x) for the point x with index sum_j x_j 2^j.
class FuncTable : public PartialFunction {
 public:
  FuncTable() = default;
  // Zero function. Throws kParameterRange if m > kMaxTableDim.
  FuncTable(std::size_t m, std::size_t n);
  // Throws kParameterRange unless values.size() == 2^m and every value has
  // dimension n.
  FuncTable(std::size_t m, std::size_t n, std::vector<BitVec> values);

  std::size_t domain_dim() const override { return m_; }
  std::size_t codomain_dim() const override { return n_; }
  std::size_t size() const { return values_.size(); }

  const BitVec& at(uint64_t index) const { return values_[index]; }
  const BitVec& operator()(const BitVec& x) const {
    return values_[x.ToWord()];
  }
  void set(uint64_t index, BitVec value);
  const std::vector<BitVec>& values() const { return values_; }

  std::optional<BitVec> Eval(const BitVec& x) override { return (*this)(x); }

  friend bool operator==(const FuncTable& a, const FuncTable& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  std::size_t m_ = 0;
  std::size_t n_ = 0;
  std::vector<BitVec> values_;
};

}  // namespace pfrlab

#endif  // PFRLAB_FUNC_TABLE_H_
