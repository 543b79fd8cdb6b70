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

#include <stdexcept>
#include <string>

namespace exmon {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different carriers, or a value falls outside its carrier.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A requested instance or family is not in the supported catalog.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Invalid JSON or textual input for one of the serialized formats.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace exmon
