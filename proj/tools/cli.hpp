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
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "exmon/core/law_report.hpp"

namespace exmon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitLawFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs the exmon command line. Output goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// The law suites behind `exmon check`, in report order.
std::vector<LawReport> check_suites(std::uint64_t seed, std::size_t cases);

}  // namespace exmon::cli
