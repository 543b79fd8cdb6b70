// Copyright 2026 The exmon Authors
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

#include <cstddef>
#include <string>

#include "exmon/core/error.hpp"

namespace exmon::lang {

/// Lexical, syntactic or static-validation error at a 1-based source position.
class ParseError : public FormatError {
 public:
  ParseError(std::size_t line, std::size_t col, const std::string& message)
      : FormatError(std::to_string(line) + ":" + std::to_string(col) + ": " + message), line_(line), col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

/// Evaluation failure at a reachable state: out-of-range assignment or
/// integer overflow.
class RuntimeError : public Error {
 public:
  using Error::Error;
};

}  // namespace exmon::lang
