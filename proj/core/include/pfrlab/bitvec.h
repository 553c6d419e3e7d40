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

#ifndef PFRLAB_BITVEC_H_
#define PFRLAB_BITVEC_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pfrlab {

class Rng;

// An element of F_2^n packed into 64-bit words. Coordinate i is bit (i % 64)
// of word (i / 64); bits at positions >= n are always zero. Addition is XOR.
//
// The text form is big-endian: the first character is coordinate n-1, so the
// lexicographic order of strings equals the numeric order used by operator<.
class BitVec {
 public:
  static constexpr std::size_t kWordBits = 64;

  BitVec() = default;
  explicit BitVec(std::size_t n) : n_(n), words_(WordsFor(n), 0) {}

  // Low `n` bits of `bits` (n <= 64); higher bits of `bits` are discarded.
  static BitVec FromWord(std::size_t n, uint64_t bits);
  static BitVec Unit(std::size_t n, std::size_t i);
  static BitVec Random(std::size_t n, Rng& rng);
  // Throws Error(kParse) on characters other than '0'/'1'.
  static BitVec FromString(std::string_view bits);

  std::size_t dim() const { return n_; }
  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> mutable_words() { return words_; }

  bool Get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void Set(std::size_t i, bool value) {
    const uint64_t mask = uint64_t{1} << (i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void Flip(std::size_t i) { words_[i / 64] ^= uint64_t{1} << (i % 64); }

  bool IsZero() const;
  std::size_t Popcount() const;
  // Index of the highest set coordinate, or -1 for the zero vector.
  int HighestBit() const;
  // Inner product over F_2.
  bool Dot(const BitVec& other) const;

  // Requires dim() <= 64.
  uint64_t ToWord() const { return words_.empty() ? 0 : words_[0]; }
  std::string ToString() const;

  // Group addition. Dimensions must agree (checked).
  BitVec& operator+=(const BitVec& other);
  friend BitVec operator+(BitVec a, const BitVec& b) { return a += b; }
  // *this = a + b, reusing this vector's storage. For hot loops.
  void AssignSum(const BitVec& a, const BitVec& b);

  // Coordinates [offset, offset + len) as a new vector of dimension len.
  BitVec Slice(std::size_t offset, std::size_t len) const;
  // this followed by other: coordinates of `other` start at dim().
  BitVec Concat(const BitVec& other) const;

  friend bool operator==(const BitVec&, const BitVec&) = default;
  // Numeric order on equal dimensions; shorter vectors sort first.
  friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b);

  std::size_t Hash() const;

  static std::size_t WordsFor(std::size_t n) { return (n + 63) / 64; }

 private:
  std::size_t n_ = 0;
  std::vector<uint64_t> words_;
};

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const { return v.Hash(); }
};

}  // namespace pfrlab

template <>
struct std::hash<pfrlab::BitVec> {
  std::size_t operator()(const pfrlab::BitVec& v) const { return v.Hash(); }
};

#endif  // PFRLAB_BITVEC_H_
