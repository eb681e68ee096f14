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

#include "twinsieve/ledger.hpp"

#include <sstream>

namespace twinsieve {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass: return "PASS";
    case CheckStatus::kFail: return "FAIL";
    case CheckStatus::kEqualityFlag: return "EQUALITY-FLAG";
  }
  return "?";
}

void Ledger::add(CheckRecord record) {
  count(record.status);
  records_.push_back(std::move(record));
}

void Ledger::add(std::string id, std::string expected, std::string observed, CheckStatus status) {
  add(CheckRecord{std::move(id), std::move(expected), std::move(observed), status});
}

void Ledger::count(CheckStatus status, std::size_t times) {
  switch (status) {
    case CheckStatus::kPass: pass_ += times; break;
    case CheckStatus::kFail: fail_ += times; break;
    case CheckStatus::kEqualityFlag: flagged_ += times; break;
  }
}

std::string Ledger::summary() const {
  std::ostringstream os;
  os << suite_ << ": " << checks() << " checks, " << pass_ << " PASS, " << fail_ << " FAIL, " << flagged_
     << " EQUALITY-FLAG -> " << (ok() ? "PASS" : "FAIL");
  return os.str();
}

Table Ledger::table() const {
  Table t{{"suite", "id", "expected", "observed", "status"}, {}};
  for (const auto& r : records_) {
    t.rows.push_back({suite_, r.id, r.expected, r.observed, std::string(to_string(r.status))});
  }
  return t;
}

}  // namespace twinsieve
