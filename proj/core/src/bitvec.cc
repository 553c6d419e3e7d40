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

#include "pfrlab/bitvec.h"

#include <algorithm>

#include "pfrlab/error.h"
#include "pfrlab/rng.h"

namespace pfrlab {
namespace {

uint64_t TopMask(std::size_t n) {
  const std::size_t r = n % 64;
  return r == 0 ? ~uint64_t{0} : (uint64_t{1} << r) - 1;
}

}  // namespace

BitVec BitVec::FromWord(std::size_t n, uint64_t bits) {
  BitVec v(n);
  if (n == 0) return v;
  v.words_[0] = n >= 64 ? bits : bits & ((uint64_t{1} << n) - 1);
  return v;
}

BitVec BitVec::Unit(std::size_t n, std::size_t i) {
  BitVec v(n);
  v.Set(i, true);
  return v;
}

BitVec BitVec::Random(std::size_t n, Rng& rng) {
  BitVec v(n);
  for (auto& w : v.words_) w = rng.Next();
  if (!v.words_.empty()) v.words_.back() &= TopMask(n);
  return v;
}

BitVec BitVec::FromString(std::string_view bits) {
  BitVec v(bits.size());
  const std::size_t n = bits.size();
  for (std::size_t k = 0; k < n; ++k) {
    const char c = bits[k];
    if (c == '1') {
      v.Set(n - 1 - k, true);
    } else if (c != '0') {
      throw Error(ErrorCode::kParse,
                  "invalid bit character '" + std::string(1, c) + "'");
    }
  }
  return v;
}

bool BitVec::IsZero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

std::size_t BitVec::Popcount() const {
  std::size_t c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

int BitVec::HighestBit() const {
  for (std::size_t k = words_.size(); k-- > 0;) {
    if (words_[k] != 0) {
      return static_cast<int>(k * 64 + 63 - std::countl_zero(words_[k]));
    }
  }
  return -1;
}

bool BitVec::Dot(const BitVec& other) const {
  if (other.n_ != n_) ThrowDimensionMismatch(n_, other.n_, "BitVec::Dot");
  uint64_t acc = 0;
  for (std::size_t k = 0; k < words_.size(); ++k) {
    acc ^= words_[k] & other.words_[k];
  }
  return std::popcount(acc) & 1;
}

std::string BitVec::ToString() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if (Get(i)) s[n_ - 1 - i] = '1';
  }
  return s;
}

BitVec& BitVec::operator+=(const BitVec& other) {
  if (other.n_ != n_) ThrowDimensionMismatch(n_, other.n_, "BitVec addition");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  return *this;
}

void BitVec::AssignSum(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) ThrowDimensionMismatch(a.n_, b.n_, "BitVec addition");
  n_ = a.n_;
  words_.resize(a.words_.size());
  for (std::size_t k = 0; k < words_.size(); ++k) {
    words_[k] = a.words_[k] ^ b.words_[k];
  }
}

BitVec BitVec::Slice(std::size_t offset, std::size_t len) const {
  if (offset + len > n_) {
    throw Error(ErrorCode::kDimensionMismatch, "BitVec::Slice out of range");
  }
  BitVec out(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (Get(offset + i)) out.Set(i, true);
  }
  return out;
}

BitVec BitVec::Concat(const BitVec& other) const {
  BitVec out(n_ + other.n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (Get(i)) out.Set(i, true);
  }
  for (std::size_t i = 0; i < other.n_; ++i) {
    if (other.Get(i)) out.Set(n_ + i, true);
  }
  return out;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  for (std::size_t k = a.words_.size(); k-- > 0;) {
    if (a.words_[k] != b.words_[k]) return a.words_[k] <=> b.words_[k];
  }
  return std::strong_ordering::equal;
}

std::size_t BitVec::Hash() const {
  uint64_t h = 0xcbf29ce484222325ULL ^ n_;
  for (uint64_t w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch:
      return "dimension-mismatch";
    case ErrorCode::kEmptyInput:
      return "empty-input";
    case ErrorCode::kBudgetExceeded:
      return "budget-exceeded";
    case ErrorCode::kCapExceeded:
      return "cap-exceeded";
    case ErrorCode::kKernelCapExceeded:
      return "kernel-cap-exceeded";
    case ErrorCode::kIsoViolation:
      return "iso-violation";
    case ErrorCode::kAmbiguity:
      return "ambiguity";
    case ErrorCode::kDensificationFailure:
      return "densification-failure";
    case ErrorCode::kModelFailure:
      return "model-failure";
    case ErrorCode::kParameterRange:
      return "parameter-range";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kIo:
      return "io";
  }
  return "unknown";
}

void ThrowDimensionMismatch(std::size_t expected, std::size_t actual,
                            std::string_view where) {
  throw Error(ErrorCode::kDimensionMismatch,
              std::string(where) + ": expected dimension " +
                  std::to_string(expected) + ", got " +
                  std::to_string(actual));
}

}  // namespace pfrlab
