// Copyright 2026 The tgrad Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tgrad {

enum class ErrorKind {
  kDegenerateInput,
  kInvalidInput,
  kBudgetExceeded,
  kParseError,
  kPreconditionFailed,
  kInvalidSpec,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerateInput: return "DegenerateInput";
    case ErrorKind::kInvalidInput: return "InvalidInput";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kPreconditionFailed: return "PreconditionFailed";
    case ErrorKind::kInvalidSpec: return "InvalidSpec";
  }
  return "Unknown";
}

// Base of every exception thrown by the library. The kind is stable and
// machine readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Thrown by edge-list parsing; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorKind::kParseError,
              "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

inline void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) fail(kind, message);
}

}  // namespace tgrad
