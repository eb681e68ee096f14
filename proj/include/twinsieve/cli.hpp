// Copyright 2026 The twinsieve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "twinsieve/interval.hpp"
#include "twinsieve/ledger.hpp"
#include "twinsieve/report.hpp"

namespace twinsieve::cli {

enum class Command { kEnumerate, kVerify, kCensus, kBars, kGaps, kBounds, kOverlap, kProbe, kPd1 };

enum class Suite { kTheorem1, kTheorem2, kIdentity211, kSymmetry, kTheorem4, kPd1 };

inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInsufficientTable = 3;
inline constexpr int kExitFeasibility = 4;
inline constexpr int kExitIo = 5;

class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
  Command command = Command::kEnumerate;
  std::optional<Suite> suite;               // verify only
  std::optional<std::size_t> n;             // --n
  std::optional<std::size_t> n_max;         // --n-max
  std::optional<Interval> range;            // --max X (-> [1, X]) or --range LO..HI
  Format format = Format::kCsv;
  std::optional<std::string> out;           // --out; standard output otherwise
  bool force = false;
  unsigned threads = 1;
  std::optional<std::uint64_t> table_limit;
  std::optional<std::string> table_cache;
  bool events = false;                      // bars: emit every beating bar
  bool merged = false;                      // gaps: merged-gap statistics
  std::size_t samples = 100000;             // identity211
  std::uint64_t seed = 1;                   // identity211
};

// Throws UsageError for malformed input and FeasibilityRefused when a
// full-period scan is requested above the default bound without --force.
RunConfig parse_args(const std::vector<std::string>& args);

struct RunResult {
  Ledger ledger;
  int exit_code;
};

// Sizes the prime table, dispatches, writes the report to `out` and the
// ledger summary to `log`.
RunResult run(const RunConfig& config, std::ostream& out, std::ostream& log);

// Full entry point with exception-to-exit-code mapping.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log);

}  // namespace twinsieve::cli
