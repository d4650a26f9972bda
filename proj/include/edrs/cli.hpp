// Copyright 2026 The edge-drs Authors
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

// Command-line front end shared by the edge-drs binary and the tests.

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <utility>

namespace edrs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitDeviations = 3;

// `args` excludes the program name. Reports go to `out`, diagnostics to
// `err`; returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

// Parses "a..b" (inclusive) or a single "a".
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace edrs::cli
