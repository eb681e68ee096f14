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
#include <string>
#include <vector>

#include "twinsieve/report.hpp"

namespace twinsieve {

enum class CheckStatus { kPass, kFail, kEqualityFlag };

const char* to_string(CheckStatus status);

struct CheckRecord {
  std::string id;
  std::string expected;
  std::string observed;
  CheckStatus status;
};

// Outcome of one verification suite. Bulk checks can be counted without
// keeping a record each; anything that is not a PASS should be recorded.
class Ledger {
 public:
  explicit Ledger(std::string suite) : suite_(std::move(suite)) {}

  void add(CheckRecord record);
  void add(std::string id, std::string expected, std::string observed, CheckStatus status);
  void count(CheckStatus status, std::size_t times = 1);

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }
  std::size_t checks() const { return pass_ + fail_ + flagged_; }
  std::size_t passed() const { return pass_; }
  std::size_t failed() const { return fail_; }
  std::size_t flagged() const { return flagged_; }

  // Equality flags do not fail a suite.
  bool ok() const { return fail_ == 0; }
  int exit_status() const { return ok() ? 0 : 1; }

  std::string summary() const;
  Table table() const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
  std::size_t pass_ = 0;
  std::size_t fail_ = 0;
  std::size_t flagged_ = 0;
};

}  // namespace twinsieve
