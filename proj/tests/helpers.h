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

#ifndef PFRLAB_TESTS_HELPERS_H_
#define PFRLAB_TESTS_HELPERS_H_

#include <cstdint>
#include <vector>

#include "oracles.h"
#include "pfrlab/pfrlab.h"

namespace testing_util {

inline oracle::Points Words(const pfrlab::PointSet& s) {
  oracle::Points out;
  for (const auto& v : s) out.push_back(v.ToWord());
  std::sort(out.begin(), out.end());
  return out;
}

inline oracle::Points Words(const std::vector<pfrlab::BitVec>& vs) {
  oracle::Points out;
  for (const auto& v : vs) out.push_back(v.ToWord());
  return out;
}

inline pfrlab::PointSet FromWords(std::size_t n, const oracle::Points& w) {
  pfrlab::PointSet s(n);
  for (uint64_t x : w) s.Insert(pfrlab::BitVec::FromWord(n, x));
  return s;
}

// `count` distinct uniform points of F_2^n (count <= 2^n).
inline pfrlab::PointSet RandomSet(std::size_t n, std::size_t count,
                                  pfrlab::Rng& rng) {
  pfrlab::PointSet s(n);
  while (s.size() < count) s.Insert(pfrlab::BitVec::Random(n, rng));
  return s;
}

inline std::vector<uint64_t> TableWords(const pfrlab::FuncTable& f) {
  std::vector<uint64_t> out;
  for (const auto& v : f.values()) out.push_back(v.ToWord());
  return out;
}

inline std::vector<uint64_t> RowWords(const pfrlab::BitMat& m) {
  std::vector<uint64_t> out;
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r).ToWord());
  return out;
}

}  // namespace testing_util

#endif  // PFRLAB_TESTS_HELPERS_H_
