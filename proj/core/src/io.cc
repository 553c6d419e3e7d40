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

#include "pfrlab/io.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "pfrlab/error.h"

namespace pfrlab {
namespace {

// Ambient and table dimensions accepted from files.
constexpr std::size_t kMaxFileDim = 4096;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  return s;
}

// Parses "<key>=<unsigned>" from the front of `s` and advances past it.
std::size_t ParseField(std::string_view& s, std::string_view key,
                       std::size_t line) {
  s = Trim(s);
  if (s.substr(0, key.size()) != key || s.size() <= key.size() ||
      s[key.size()] != '=') {
    throw ParseError(line, "expected '" + std::string(key) + "=<int>'");
  }
  s.remove_prefix(key.size() + 1);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) {
    throw ParseError(line, "invalid value for '" + std::string(key) + "'");
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return value;
}

void ExpectEnd(std::string_view s, std::size_t line) {
  if (!Trim(s).empty()) throw ParseError(line, "unexpected trailing text");
}

BitVec ParseBits(std::string_view s, std::size_t width, std::size_t line) {
  s = Trim(s);
  if (s.size() != width) {
    throw ParseError(line, "expected a bit string of length " +
                               std::to_string(width) + ", got length " +
                               std::to_string(s.size()));
  }
  try {
    return BitVec::FromString(s);
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

// Reads the remaining non-blank lines; errors if a blank line is followed by
// more content.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool Next(std::string& out) {
    if (!std::getline(in_, out)) return false;
    ++line_;
    return true;
  }
  std::size_t line() const { return line_; }

  void ExpectOnlyBlank() {
    std::string rest;
    while (Next(rest)) {
      if (!Trim(rest).empty()) {
        throw ParseError(line_, "more entries than the header declares");
      }
    }
  }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::ifstream OpenIn(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  return out;
}

void Finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace

PointSet ParseSet(std::istream& in) {
  LineReader reader(in);
  std::string text;
  if (!reader.Next(text)) throw ParseError(1, "missing header");
  std::string_view header = text;
  const std::size_t n = ParseField(header, "n", 1);
  const std::size_t count = ParseField(header, "count", 1);
  ExpectEnd(header, 1);
  if (n == 0 || n > kMaxFileDim) {
    throw ParseError(1, "n must lie in [1, " + std::to_string(kMaxFileDim) +
                            "]");
  }
  PointSet set(n);
  set.Reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!reader.Next(text)) {
      throw ParseError(reader.line() + 1,
                       "file ended after " + std::to_string(i) + " of " +
                           std::to_string(count) + " elements");
    }
    if (!set.Insert(ParseBits(text, n, reader.line()))) {
      throw ParseError(reader.line(), "duplicate element");
    }
  }
  reader.ExpectOnlyBlank();
  return set;
}

void WriteSet(std::ostream& out, const PointSet& set) {
  out << "n=" << set.ambient() << " count=" << set.size() << '\n';
  for (const BitVec& v : set) out << v.ToString() << '\n';
}

PointSet ReadSetFile(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ParseSet(in);
}

void WriteSetFile(const std::string& path, const PointSet& set) {
  std::ofstream out = OpenOut(path);
  WriteSet(out, set);
  Finish(out, path);
}

FuncTable ParseTable(std::istream& in) {
  LineReader reader(in);
  std::string text;
  if (!reader.Next(text)) throw ParseError(1, "missing header");
  std::string_view header = text;
  const std::size_t m = ParseField(header, "m", 1);
  const std::size_t n = ParseField(header, "n", 1);
  ExpectEnd(header, 1);
  if (m > kMaxTableDim) {
    throw ParseError(1, "m must be at most " + std::to_string(kMaxTableDim));
  }
  if (n == 0 || n > kMaxFileDim) {
    throw ParseError(1, "n must lie in [1, " + std::to_string(kMaxFileDim) +
                            "]");
  }
  const std::size_t size = std::size_t{1} << m;
  std::vector<BitVec> values;
  values.reserve(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (!reader.Next(text)) {
      throw ParseError(reader.line() + 1,
                       "table truncated: expected " + std::to_string(size) +
                           " values, found " + std::to_string(i));
    }
    values.push_back(ParseBits(text, n, reader.line()));
  }
  reader.ExpectOnlyBlank();
  return FuncTable(m, n, std::move(values));
}

void WriteTable(std::ostream& out, const FuncTable& f) {
  out << "m=" << f.domain_dim() << " n=" << f.codomain_dim() << '\n';
  for (const BitVec& v : f.values()) out << v.ToString() << '\n';
}

FuncTable ReadTableFile(const std::string& path) {
  std::ifstream in = OpenIn(path);
  return ParseTable(in);
}

void WriteTableFile(const std::string& path, const FuncTable& f) {
  std::ofstream out = OpenOut(path);
  WriteTable(out, f);
  Finish(out, path);
}

}  // namespace pfrlab
