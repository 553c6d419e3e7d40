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

#ifndef PFRLAB_ERROR_H_
#define PFRLAB_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pfrlab {

enum class ErrorCode {
  kDimensionMismatch,
  kEmptyInput,
  kBudgetExceeded,
  kCapExceeded,
  kKernelCapExceeded,
  kIsoViolation,
  kAmbiguity,
  kDensificationFailure,
  kModelFailure,
  kParameterRange,
  kParse,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Base error type for every failure the library reports.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

  // Failures caused by an unlucky random draw; a caller may restart with
  // fresh randomness.
  bool retriable() const {
    return code_ == ErrorCode::kIsoViolation ||
           code_ == ErrorCode::kAmbiguity ||
           code_ == ErrorCode::kDensificationFailure ||
           code_ == ErrorCode::kKernelCapExceeded ||
           code_ == ErrorCode::kModelFailure;
  }

 private:
  ErrorCode code_;
};

// Parse failure with the 1-based line number of the offending input line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorCode::kParse,
              "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

[[noreturn]] void ThrowDimensionMismatch(std::size_t expected,
                                         std::size_t actual,
                                         std::string_view where);

}  // namespace pfrlab

#endif  // PFRLAB_ERROR_H_
