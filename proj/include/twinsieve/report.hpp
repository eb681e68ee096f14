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

// Deterministic CSV / JSON emission. Every report is flattened into a Table
// of typed cells; big integers render as decimal strings and exact rationals
// as "num/den" (CSV) or {"num": "...", "den": "..."} (JSON).

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "twinsieve/stats.hpp"

namespace twinsieve {

enum class Format { kCsv, kJson };

using Cell = std::variant<std::monostate, std::uint64_t, mpz_class, mpq_class, std::string, bool>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// CSV: header row, then one row per record. JSON: an array holding one
// object per record; keys follow column order. std::ios_base::failure when
// the sink goes bad.
void emit(const Table& table, Format format, std::ostream& sink);

Table positions_table(const std::vector<std::uint64_t>& positions);
Table census_table(const std::vector<CensusReport>& reports);
Table bars_summary_table(const BeatingBarsReport& report);
Table bar_events_table(const BeatingBarsReport& report);
Table gap_table(const GapHistogram& histogram);
Table merged_gap_table(const MergedGapStats& stats);
Table bounds_table(const std::vector<BoundsRow>& rows);
Table overlap_table(const std::vector<OverlapReport>& reports);
Table probe_table(const ProbeReport& report);
Table interval_table(const std::vector<BigInterval>& blocks);

const char* to_string(Relation relation);
const char* to_string(BarKind kind);

}  // namespace twinsieve
